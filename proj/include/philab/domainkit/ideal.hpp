#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "philab/domainkit/field.hpp"

namespace philab {

/// Rank-2 lattice {x·a + y·(b + c·θ)} / den with a, c, den > 0, 0 ≤ b < a and
/// gcd(a, b, c, den) = 1.
struct QuadLattice {
    Int a = 1;
    Int b = 0;
    Int c = 1;
    Int den = 1;
    auto operator<=>(const QuadLattice&) const = default;
};

namespace detail {

using IntVec = std::array<Int, 2>;

/// Hermite normal form of the ℤ-span of integer vectors (u, v) ↦ u + v·θ.
/// Returns nullopt when the span has rank < 2.
inline std::optional<QuadLattice> hnf(std::vector<IntVec> gens) {
    // Euclid on the θ-column until a single vector has nonzero v.
    for (;;) {
        std::size_t pivot = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i][1] != 0 && (pivot == gens.size() || std::abs(gens[i][1]) < std::abs(gens[pivot][1]))) pivot = i;
        if (pivot == gens.size()) return std::nullopt;
        bool reduced = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i == pivot || gens[i][1] == 0) continue;
            const Int q = gens[i][1] / gens[pivot][1];
            gens[i][0] = checked_add(gens[i][0], -checked_mul(q, gens[pivot][0]));
            gens[i][1] -= q * gens[pivot][1];
            reduced = true;
        }
        if (!reduced) {
            IntVec p = gens[pivot];
            if (p[1] < 0) p = {-p[0], -p[1]};
            Int a = 0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (i != pivot) a = std::gcd(a, gens[i][0]);
            if (a == 0) return std::nullopt;
            return QuadLattice{a, mod_floor(p[0], a), p[1], 1};
        }
    }
}

inline QuadLattice normalize(QuadLattice l) {
    const Int g = std::gcd(std::gcd(l.a, l.b), std::gcd(l.c, l.den));
    return {l.a / g, l.b / g, l.c / g, l.den / g};
}

/// Integer vector membership in the numerator lattice (den ignored).
inline bool lattice_contains(const QuadLattice& l, Int u, Int v) {
    if (v % l.c != 0) return false;
    const Int y = v / l.c;
    return (u - checked_mul(y, l.b)) % l.a == 0;
}

/// Solves x ≡ r1 (mod m1), x ≡ r2 (mod m2); nullopt when incompatible.
inline std::optional<Int> crt(Int r1, Int m1, Int r2, Int m2) {
    const Int g = std::gcd(m1, m2);
    if ((r2 - r1) % g != 0) return std::nullopt;
    const Int m2g = m2 / g;
    const __int128 k = m2g == 1 ? 0 : static_cast<__int128>(mod_floor((r2 - r1) / g, m2g)) * inverse_mod(m1 / g, m2g) % m2g;
    const Int l = lcm_checked(m1, m2);
    return mod_floor(static_cast<Int>((r1 + k * m1) % l), l);
}

/// Intersection of two integer lattices given in HNF (den = 1).
inline QuadLattice intersect_integral(const QuadLattice& x, const QuadLattice& y) {
    const Int L = lcm_checked(x.c, y.c);
    const Int y1 = L / x.c, y2 = L / y.c;
    const Int g = std::gcd(x.a, y.a);
    const Int delta = mod_floor(checked_add(checked_mul(y1, x.b), -checked_mul(y2, y.b)), g);
    const Int k0 = g / std::gcd(g, delta);
    const auto u = crt(mod_floor(checked_mul(k0 * y1, x.b), x.a), x.a, mod_floor(checked_mul(k0 * y2, y.b), y.a), y.a);
    if (!u) throw Error(ErrorCode::InternalInconsistency, "lattice intersection congruence unsolvable");
    const Int a = lcm_checked(x.a, y.a);
    return {a, *u, checked_mul(k0, L), 1};
}

}  // namespace detail

/// A fractional ideal of a Domain; the zero ideal is allowed. ℤ ideals are
/// gℤ with g ≥ 0 rational, ℤ_(p) ideals are p^k, quadratic ideals are HNF
/// lattices.
class DomIdeal {
public:
    static DomIdeal zero(const Domain& D) { return DomIdeal(D, true); }

    static DomIdeal unit(const Domain& D) {
        DomIdeal i(D, false);
        i.gen_ = 1;
        return i;
    }

    static DomIdeal integer(const Domain& D, Rational g) {
        require_kind(D, DomainKind::Int);
        if (g == Rational(0)) return zero(D);
        DomIdeal i(D, false);
        i.gen_ = boost::abs(g);
        return i;
    }

    static DomIdeal power(const Domain& D, Int k) {
        require_kind(D, DomainKind::IntLoc);
        DomIdeal i(D, false);
        i.exp_ = k;
        return i;
    }

    /// Lattice with the given integer generators over denominator den; the
    /// result must be closed under multiplication by θ.
    static DomIdeal lattice(const Domain& D, const std::vector<std::array<Int, 2>>& gens, Int den = 1) {
        require_kind(D, DomainKind::Quad);
        auto h = detail::hnf(gens);
        if (!h) {
            bool all_zero = true;
            for (const auto& g : gens) all_zero = all_zero && g[0] == 0 && g[1] == 0;
            if (all_zero) return zero(D);
            throw Error(ErrorCode::InvalidModule, "generators span a rank-1 lattice, not an ideal");
        }
        h->den = den;
        DomIdeal i(D, false);
        i.lat_ = detail::normalize(*h);
        if (!i.theta_stable())
            throw Error(ErrorCode::InvalidModule, "lattice " + i.hnf_string() + " is not closed under multiplication by θ");
        return i;
    }

    /// D-submodule of K generated by the given elements.
    static DomIdeal generated(const Domain& D, const std::vector<FieldElem>& gens) {
        switch (D.kind()) {
            case DomainKind::Int: {
                Rational g(0);
                for (const auto& x : gens) g = rat_gcd(g, x.u);
                return integer(D, g);
            }
            case DomainKind::IntLoc: {
                std::optional<Int> k;
                for (const auto& x : gens)
                    if (!x.is_zero()) {
                        const Int v = detail::valuation(x.u, D.p());
                        k = k ? std::min(*k, v) : v;
                    }
                return k ? power(D, *k) : zero(D);
            }
            case DomainKind::Quad: {
                std::vector<FieldElem> zgens;
                for (const auto& x : gens) {
                    zgens.push_back(x);
                    zgens.push_back(mul(D, x, FieldElem(Rational(0), Rational(1))));
                }
                return from_z_generators(D, zgens);
            }
        }
        return zero(D);
    }

    static DomIdeal principal(const Domain& D, const FieldElem& x) { return generated(D, {x}); }

    /// Quadratic case: ℤ-span of rational elements (must already be a D-module).
    static DomIdeal from_z_generators(const Domain& D, const std::vector<FieldElem>& gens) {
        Int den = 1;
        for (const auto& x : gens) den = detail::lcm_checked(den, detail::lcm_checked(x.u.denominator(), x.v.denominator()));
        std::vector<std::array<Int, 2>> ints;
        for (const auto& x : gens) {
            const Rational u = x.u * Rational(den), v = x.v * Rational(den);
            ints.push_back({u.numerator(), v.numerator()});
        }
        return lattice(D, ints, den);
    }

    const Domain& domain() const { return dom_; }
    bool is_zero() const { return zero_; }
    const Rational& generator() const { return gen_; }
    Int exponent() const { return exp_; }
    const QuadLattice& hnf() const { return lat_; }

    /// ℤ-basis (quadratic) or single generator.
    std::vector<FieldElem> generators() const {
        if (zero_) return {};
        switch (dom_.kind()) {
            case DomainKind::Int: return {FieldElem(gen_)};
            case DomainKind::IntLoc: return {FieldElem(pow_p(exp_))};
            case DomainKind::Quad: {
                const Rational den(lat_.den);
                return {FieldElem(Rational(lat_.a) / den), FieldElem(Rational(lat_.b) / den, Rational(lat_.c) / den)};
            }
        }
        return {};
    }

    bool contains(const FieldElem& x) const {
        if (x.is_zero()) return true;
        if (zero_) return false;
        switch (dom_.kind()) {
            case DomainKind::Int: return detail::is_integer(x.u / gen_);
            case DomainKind::IntLoc: return detail::valuation(x.u, dom_.p()) >= exp_;
            case DomainKind::Quad: {
                const Rational u = x.u * Rational(lat_.den), v = x.v * Rational(lat_.den);
                if (!detail::is_integer(u) || !detail::is_integer(v)) return false;
                return detail::lattice_contains(lat_, u.numerator(), v.numerator());
            }
        }
        return false;
    }

    bool is_subset_of(const DomIdeal& o) const {
        require_same(*this, o);
        for (const auto& g : generators())
            if (!o.contains(g)) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& g : generators())
            if (!in_domain(dom_, g)) return false;
        return true;
    }

    bool is_unit_ideal() const { return *this == unit(dom_); }

    /// Absolute norm: |g| for ℤ, p^k for ℤ_(p), lattice index for orders.
    Rational norm() const {
        if (zero_) return 0;
        switch (dom_.kind()) {
            case DomainKind::Int: return gen_;
            case DomainKind::IntLoc: return pow_p(exp_);
            case DomainKind::Quad: return Rational(detail::checked_mul(lat_.a, lat_.c), detail::checked_mul(lat_.den, lat_.den));
        }
        return 0;
    }

    bool operator==(const DomIdeal& o) const {
        if (!(dom_ == o.dom_) || zero_ != o.zero_) return false;
        if (zero_) return true;
        switch (dom_.kind()) {
            case DomainKind::Int: return gen_ == o.gen_;
            case DomainKind::IntLoc: return exp_ == o.exp_;
            case DomainKind::Quad: return lat_ == o.lat_;
        }
        return false;
    }

    /// Deterministic order: zero first, then by norm, then by canonical data.
    bool operator<(const DomIdeal& o) const {
        if (zero_ != o.zero_) return zero_;
        if (zero_) return false;
        if (norm() != o.norm()) return norm() < o.norm();
        return std::tie(gen_, exp_, lat_) < std::tie(o.gen_, o.exp_, o.lat_);
    }

    std::string to_string() const {
        if (zero_) return "(0)";
        switch (dom_.kind()) {
            case DomainKind::Int: return detail::rat_string(gen_) + "Z";
            case DomainKind::IntLoc: return std::to_string(dom_.p()) + "^" + std::to_string(exp_);
            case DomainKind::Quad: {
                const auto g = generators();
                return "(" + philab::to_string(dom_, g[0]) + ", " + philab::to_string(dom_, g[1]) + ")";
            }
        }
        return "";
    }

    std::string hnf_string() const {
        std::string s = "[[" + std::to_string(lat_.a) + ",0],[" + std::to_string(lat_.b) + "," + std::to_string(lat_.c) + "]]";
        if (lat_.den != 1) s += "/" + std::to_string(lat_.den);
        return s;
    }

    static void require_same(const DomIdeal& a, const DomIdeal& b) {
        if (!(a.dom_ == b.dom_))
            throw Error(ErrorCode::MixedDomains, a.dom_.label() + " vs " + b.dom_.label());
    }

private:
    DomIdeal(const Domain& D, bool zero) : dom_(D), zero_(zero) {}

    static void require_kind(const Domain& D, DomainKind k) {
        if (D.kind() != k) throw Error(ErrorCode::MixedDomains, "ideal constructor does not match " + D.label());
    }

    static Rational rat_gcd(const Rational& x, const Rational& y) {
        if (x == Rational(0)) return boost::abs(y);
        if (y == Rational(0)) return boost::abs(x);
        const Int n = std::gcd(detail::checked_mul(x.numerator(), y.denominator()), detail::checked_mul(y.numerator(), x.denominator()));
        return Rational(n, detail::checked_mul(x.denominator(), y.denominator()));
    }

    Rational pow_p(Int k) const {
        Int m = 1;
        for (Int i = 0; i < std::abs(k); ++i) m = detail::checked_mul(m, dom_.p());
        return k >= 0 ? Rational(m) : Rational(1, m);
    }

    bool theta_stable() const {
        const Int tc = dom_.theta_const(), tt = dom_.theta_trace();
        // θ·a = a·θ and θ·(b + cθ) = c·tc + (b + c·tt)·θ
        return detail::lattice_contains(lat_, 0, lat_.a) &&
               detail::lattice_contains(lat_, detail::checked_mul(lat_.c, tc),
                                        detail::checked_add(lat_.b, detail::checked_mul(lat_.c, tt)));
    }

    Domain dom_;
    bool zero_;
    Rational gen_{0};
    Int exp_ = 0;
    QuadLattice lat_{};
};

inline DomIdeal ideal_sum(const DomIdeal& I, const DomIdeal& J) {
    DomIdeal::require_same(I, J);
    if (I.is_zero()) return J;
    if (J.is_zero()) return I;
    const auto& D = I.domain();
    switch (D.kind()) {
        case DomainKind::IntLoc: return DomIdeal::power(D, std::min(I.exponent(), J.exponent()));
        case DomainKind::Int: return DomIdeal::generated(D, {I.generator(), J.generator()});
        case DomainKind::Quad: {
            auto gens = I.generators();
            for (const auto& g : J.generators()) gens.push_back(g);
            return DomIdeal::from_z_generators(D, gens);
        }
    }
    return I;
}

inline DomIdeal ideal_product(const DomIdeal& I, const DomIdeal& J) {
    DomIdeal::require_same(I, J);
    const auto& D = I.domain();
    if (I.is_zero() || J.is_zero()) return DomIdeal::zero(D);
    switch (D.kind()) {
        case DomainKind::IntLoc: return DomIdeal::power(D, I.exponent() + J.exponent());
        case DomainKind::Int: return DomIdeal::integer(D, I.generator() * J.generator());
        case DomainKind::Quad: {
            std::vector<FieldElem> gens;
            for (const auto& x : I.generators())
                for (const auto& y : J.generators()) gens.push_back(mul(D, x, y));
            return DomIdeal::from_z_generators(D, gens);
        }
    }
    return I;
}

inline DomIdeal ideal_intersection(const DomIdeal& I, const DomIdeal& J) {
    DomIdeal::require_same(I, J);
    const auto& D = I.domain();
    if (I.is_zero() || J.is_zero()) return DomIdeal::zero(D);
    switch (D.kind()) {
        case DomainKind::IntLoc: return DomIdeal::power(D, std::max(I.exponent(), J.exponent()));
        case DomainKind::Int: {
            const Rational g = I.generator(), h = J.generator();
            return DomIdeal::integer(D, g * h / DomIdeal::generated(D, {g, h}).generator());
        }
        case DomainKind::Quad: {
            const auto &x = I.hnf(), &y = J.hnf();
            const Int den = detail::lcm_checked(x.den, y.den);
            const Int sx = den / x.den, sy = den / y.den;
            const QuadLattice xs{detail::checked_mul(x.a, sx), detail::checked_mul(x.b, sx), detail::checked_mul(x.c, sx), 1};
            const QuadLattice ys{detail::checked_mul(y.a, sy), detail::checked_mul(y.b, sy), detail::checked_mul(y.c, sy), 1};
            const QuadLattice m = detail::intersect_integral(xs, ys);
            return DomIdeal::lattice(D, {{m.a, 0}, {m.b, m.c}}, den);
        }
    }
    return I;
}

/// x·I for a field element x.
inline DomIdeal scale(const FieldElem& x, const DomIdeal& I) {
    const auto& D = I.domain();
    if (x.is_zero() || I.is_zero()) return DomIdeal::zero(D);
    std::vector<FieldElem> gens;
    for (const auto& g : I.generators()) gens.push_back(mul(D, x, g));
    return D.kind() == DomainKind::Quad ? DomIdeal::from_z_generators(D, gens) : DomIdeal::generated(D, gens);
}

/// Fractional colon {x ∈ K : x·J ⊆ I}, J ≠ 0.
inline DomIdeal colon(const DomIdeal& I, const DomIdeal& J) {
    DomIdeal::require_same(I, J);
    const auto& D = I.domain();
    if (J.is_zero()) throw Error(ErrorCode::ZeroIdealResidualDividend, "colon by the zero ideal");
    if (I.is_zero()) return DomIdeal::zero(D);
    std::optional<DomIdeal> acc;
    for (const auto& j : J.generators()) {
        if (j.is_zero()) continue;
        const auto part = scale(inverse(D, j), I);
        acc = acc ? ideal_intersection(*acc, part) : part;
    }
    return *acc;
}

/// Ring residual (I :_D J) = (I : J) ∩ D.
inline DomIdeal residual(const DomIdeal& I, const DomIdeal& J) {
    return ideal_intersection(colon(I, J), DomIdeal::unit(I.domain()));
}

struct DomIdealOps {
    DomIdeal sum;
    DomIdeal product;
    DomIdeal intersection;
    DomIdeal residual;
};

inline DomIdealOps dom_ideal_ops(const DomIdeal& I, const DomIdeal& J) {
    return {ideal_sum(I, J), ideal_product(I, J), ideal_intersection(I, J), residual(I, J)};
}

}  // namespace philab
