#pragma once

#include <string>
#include <vector>

#include "philab/idealcalc/ideal.hpp"

namespace philab {

/// Polynomial in R[Z] with coefficients stored as element indices, constant
/// term first. Trailing zeros are trimmed, so the zero polynomial is empty.
class Poly {
public:
    explicit Poly(RingPtr ring, std::vector<Elem> coeffs = {}) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        for (Elem e : c_)
            if (e >= ring_->order()) throw Error(ErrorCode::UnknownElement, "coefficient index out of range");
        trim();
    }

    /// Polynomial whose coefficients are the base-|R| digits of `index`,
    /// least significant first; `length` digits are read.
    static Poly from_index(RingPtr ring, std::size_t index, std::size_t length) {
        std::vector<Elem> c(length);
        const std::size_t n = ring->order();
        for (auto& e : c) {
            e = static_cast<Elem>(index % n);
            index /= n;
        }
        return Poly(std::move(ring), std::move(c));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }

    /// Σ c_i·|R|^i, the enumeration index.
    std::size_t index() const {
        std::size_t idx = 0;
        for (std::size_t i = c_.size(); i-- > 0;) idx = idx * ring_->order() + c_[i];
        return idx;
    }

    bool operator==(const Poly& o) const { return ring_.get() == o.ring_.get() && c_ == o.c_; }

    /// "xZ+y", "Z^2+3", "(x+y)Z"; the zero polynomial prints as "0".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == ring_->zero()) continue;
            const std::string& name = ring_->name(c_[i]);
            std::string term;
            if (i == 0) {
                term = name;
            } else {
                const std::string z = i == 1 ? "Z" : "Z^" + std::to_string(i);
                if (c_[i] == ring_->one()) term = z;
                else if (name.find('+') != std::string::npos) term = "(" + name + ")" + z;
                else if (name.find('*') != std::string::npos) term = name + "*" + z;
                else term = name + z;
            }
            out += (out.empty() ? "" : "+") + term;
        }
        return out;
    }

    /// Coefficient list, constant term first: "[y, x]".
    std::string coeff_list() const {
        std::string out = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + ring_->name(c_[i]);
        return out + "]";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == ring_->zero()) c_.pop_back();
    }

    RingPtr ring_;
    std::vector<Elem> c_;
};

inline Poly poly_mul(const Poly& f, const Poly& g) {
    if (f.ring().get() != g.ring().get()) throw Error(ErrorCode::MixedRings, "polynomials over different rings");
    const auto& R = *f.ring();
    if (f.is_zero() || g.is_zero()) return Poly(f.ring());
    std::vector<Elem> c(f.coeffs().size() + g.coeffs().size() - 1, R.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) c[i + j] = R.add(c[i + j], R.mul(f.coeffs()[i], g.coeffs()[j]));
    return Poly(f.ring(), std::move(c));
}

/// c(f): the ideal generated by the coefficients.
inline FiniteIdeal content(const Poly& f) { return span(f.ring(), f.coeffs()); }

/// True iff every coefficient is nilpotent, i.e. f is nilpotent in R[Z].
inline bool poly_is_nilpotent(const Poly& f) {
    for (Elem e : f.coeffs())
        if (!f.ring()->is_nilpotent(e)) return false;
    return true;
}

}  // namespace philab
