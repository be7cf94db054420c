#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "philab/core/error.hpp"

namespace philab {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

namespace detail {

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::TooLarge, "integer overflow in exact arithmetic");
    return r;
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::TooLarge, "integer overflow in exact arithmetic");
    return r;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int lcm_checked(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(std::abs(a) / std::gcd(a, b), std::abs(b));
}

inline bool is_prime_int(Int n) {
    if (n < 2) return false;
    for (Int q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

inline bool is_squarefree(Int d) {
    Int n = std::abs(d);
    for (Int q = 2; q * q <= n; ++q)
        if (n % (q * q) == 0) return false;
    return true;
}

/// p-adic valuation of a nonzero integer.
inline Int valuation(Int n, Int p) {
    Int k = 0;
    for (n = std::abs(n); n % p == 0; n /= p) ++k;
    return k;
}

inline Int valuation(const Rational& x, Int p) { return valuation(x.numerator(), p) - valuation(x.denominator(), p); }

inline Int floor(const Rational& x) { return floor_div(x.numerator(), x.denominator()); }

/// Representative of x mod ℤ in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(floor(x)); }

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

inline std::string rat_string(const Rational& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Inverse of a modulo m (gcd(a, m) = 1, m ≥ 1).
inline Int inverse_mod(Int a, Int m) {
    __int128 old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        const __int128 tr = old_r - q * r;
        old_r = r;
        r = tr;
        const __int128 ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    if (old_r != 1) throw Error(ErrorCode::InternalInconsistency, "inverse_mod of a non-unit");
    return mod_floor(static_cast<Int>(old_s % m), m);
}

}  // namespace detail

enum class DomainKind { Int, IntLoc, Quad };

/// A computable integral domain: ℤ, ℤ localized at a prime p, or the order of
/// conductor f in ℚ(√d). Quadratic orders use the basis (1, θ) with θ = f·ω,
/// ω = √d or (1+√d)/2, and θ² = t·θ + c.
class Domain {
public:
    static Domain integers() { return Domain(DomainKind::Int, 0, 0, 1); }

    static Domain localized(Int p) {
        if (!detail::is_prime_int(p)) throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is not prime");
        return Domain(DomainKind::IntLoc, p, 0, 1);
    }

    static Domain quadratic(Int d, Int f) {
        if (d == 0 || d == 1 || !detail::is_squarefree(d))
            throw Error(ErrorCode::InvalidModulus, "d = " + std::to_string(d) + " must be squarefree and not 0, 1");
        if (f < 1) throw Error(ErrorCode::InvalidModulus, "conductor must be positive");
        return Domain(DomainKind::Quad, 0, d, f);
    }

    DomainKind kind() const { return kind_; }
    Int p() const { return p_; }
    Int d() const { return d_; }
    Int f() const { return f_; }

    bool omega_is_half() const { return detail::mod_floor(d_, 4) == 1; }
    Int theta_trace() const { return omega_is_half() ? f_ : 0; }
    Int theta_const() const {
        return omega_is_half() ? detail::checked_mul(f_ * f_, (d_ - 1) / 4) : detail::checked_mul(f_ * f_, d_);
    }
    /// Discriminant of the order, f²·Δ_K.
    Int discriminant() const { return f_ * f_ * (omega_is_half() ? d_ : 4 * d_); }
    bool is_imaginary() const { return kind_ == DomainKind::Quad && d_ < 0; }

    std::string label() const {
        switch (kind_) {
            case DomainKind::Int: return "Z";
            case DomainKind::IntLoc: return "Zloc:" + std::to_string(p_);
            case DomainKind::Quad: return "quad:" + std::to_string(d_) + ":" + std::to_string(f_);
        }
        return "";
    }

    std::string omega_name() const {
        if (d_ == -1) return "i";
        if (omega_is_half()) return "w";
        return "sqrt(" + std::to_string(d_) + ")";
    }

    bool operator==(const Domain&) const = default;

private:
    Domain(DomainKind kind, Int p, Int d, Int f) : kind_(kind), p_(p), d_(d), f_(f) {}

    DomainKind kind_;
    Int p_;
    Int d_;
    Int f_;
};

/// Element u + v·θ of the fraction field (v = 0 for ℤ and ℤ_(p)).
struct FieldElem {
    Rational u{0};
    Rational v{0};

    FieldElem() = default;
    FieldElem(Rational u_, Rational v_ = Rational(0)) : u(u_), v(v_) {}
    FieldElem(Int u_) : u(u_) {}

    bool is_zero() const { return u == Rational(0) && v == Rational(0); }
    bool operator==(const FieldElem&) const = default;
};

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return {a.u + b.u, a.v + b.v}; }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return {a.u - b.u, a.v - b.v}; }
inline FieldElem operator-(const FieldElem& a) { return {-a.u, -a.v}; }

inline FieldElem mul(const Domain& D, const FieldElem& a, const FieldElem& b) {
    if (D.kind() != DomainKind::Quad) return {a.u * b.u};
    const Rational t(D.theta_trace()), c(D.theta_const());
    return {a.u * b.u + c * a.v * b.v, a.u * b.v + a.v * b.u + t * a.v * b.v};
}

inline FieldElem conj(const Domain& D, const FieldElem& a) {
    if (D.kind() != DomainKind::Quad) return a;
    return {a.u + Rational(D.theta_trace()) * a.v, -a.v};
}

/// Field norm (the element itself for ℤ and ℤ_(p)).
inline Rational norm(const Domain& D, const FieldElem& a) {
    if (D.kind() != DomainKind::Quad) return a.u;
    return a.u * a.u + Rational(D.theta_trace()) * a.u * a.v - Rational(D.theta_const()) * a.v * a.v;
}

inline FieldElem inverse(const Domain& D, const FieldElem& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroIdeal, "inverse of zero");
    if (D.kind() != DomainKind::Quad) return {Rational(1) / a.u};
    const Rational n = norm(D, a);
    const FieldElem c = conj(D, a);
    return {c.u / n, c.v / n};
}

inline bool in_domain(const Domain& D, const FieldElem& a) {
    switch (D.kind()) {
        case DomainKind::Int: return detail::is_integer(a.u);
        case DomainKind::IntLoc: return a.u.denominator() % D.p() != 0;
        case DomainKind::Quad: return detail::is_integer(a.u) && detail::is_integer(a.v);
    }
    return false;
}

inline bool is_unit(const Domain& D, const FieldElem& a) {
    if (a.is_zero() || !in_domain(D, a)) return false;
    switch (D.kind()) {
        case DomainKind::Int: return boost::abs(a.u) == Rational(1);
        case DomainKind::IntLoc: return a.u.numerator() % D.p() != 0;
        case DomainKind::Quad: {
            const Rational n = norm(D, a);
            return boost::abs(n) == Rational(1);
        }
    }
    return false;
}

/// a | b in D.
inline bool divides(const Domain& D, const FieldElem& a, const FieldElem& b) {
    if (a.is_zero()) return b.is_zero();
    return in_domain(D, mul(D, b, inverse(D, a)));
}

inline std::string to_string(const Domain& D, const FieldElem& a) {
    if (D.kind() != DomainKind::Quad || a.v == Rational(0)) return detail::rat_string(a.u);
    const Rational coeff = a.v * Rational(D.f());
    std::string w;
    if (coeff == Rational(1))
        w = D.omega_name();
    else if (coeff == Rational(-1))
        w = "-" + D.omega_name();
    else
        w = detail::rat_string(coeff) + D.omega_name();
    if (a.u == Rational(0)) return w;
    return detail::rat_string(a.u) + (w[0] == '-' ? "" : "+") + w;
}

}  // namespace philab
