#pragma once

#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "philab/core/rng.hpp"
#include "philab/domainkit/ideal.hpp"

namespace philab {

namespace detail {

/// frac(a·m) for an integer a, computed modulo den(m) so nothing overflows.
inline Rational frac_mul(Int a, const Rational& m) {
    const Int q = m.denominator();
    const __int128 r = static_cast<__int128>(mod_floor(a, q)) * mod_floor(m.numerator(), q) % q;
    return Rational(static_cast<Int>(r), q);
}

/// frac(x + y) for x, y in [0, 1), with a 128-bit intermediate.
inline Rational frac_add(const Rational& x, const Rational& y) {
    const Int g = std::gcd(x.denominator(), y.denominator());
    const __int128 qx = x.denominator() / g;
    const __int128 den = qx * y.denominator();
    __int128 num = static_cast<__int128>(x.numerator()) * (y.denominator() / g) + static_cast<__int128>(y.numerator()) * qx;
    num %= den;
    if (num < 0) num += den;
    __int128 a = num, b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) return Rational(0);
    num /= a;
    const __int128 d = den / a;
    if (d > std::numeric_limits<Int>::max()) throw Error(ErrorCode::TooLarge, "module denominator exceeds int64");
    return Rational(static_cast<Int>(num), static_cast<Int>(d));
}

}  // namespace detail

enum class ModuleTag { FractionsModD, SelfModule };

/// (a, m) with a ∈ D and m a canonical representative of K/D (or of D for
/// the self-module family).
struct DivElem {
    FieldElem a;
    FieldElem m;
    bool operator==(const DivElem&) const = default;
};

struct ElemPredicates {
    bool is_nilpotent = false;
    bool is_zerodivisor = false;
    bool is_unit = false;
    std::optional<DivElem> zerodivisor_witness;  // nonzero z with x·z = 0
    std::optional<DivElem> inverse;
};

/// R = D ⋉ K/D (FractionsModD) or D ⋉ D (SelfModule) with
/// (a, m)(b, n) = (ab, an + bm).
class DividedExtRing {
public:
    DividedExtRing(Domain base, ModuleTag tag) : base_(base), tag_(tag) {}

    const Domain& base() const { return base_; }
    ModuleTag tag() const { return tag_; }
    bool divisible() const { return tag_ == ModuleTag::FractionsModD; }

    std::string label() const { return (divisible() ? "divext:" : "selfext:") + base_.label(); }

    bool operator==(const DividedExtRing&) const = default;

    /// Reduction of a field element to the canonical module representative.
    FieldElem reduce(const FieldElem& m) const {
        if (!divisible()) {
            if (!in_domain(base_, m)) throw Error(ErrorCode::UnknownElement, "module entry not in " + base_.label());
            return m;
        }
        switch (base_.kind()) {
            case DomainKind::Int: return {detail::frac(m.u)};
            case DomainKind::IntLoc: {
                const Int p = base_.p();
                Int den = m.u.denominator(), pk = 1;
                while (den % p == 0) {
                    den /= p;
                    pk = detail::checked_mul(pk, p);
                }
                if (pk == 1) return {};
                const Int num = detail::mod_floor(m.u.numerator(), pk);
                const Int r = static_cast<Int>(static_cast<__int128>(num) * detail::inverse_mod(den, pk) % pk);
                return {Rational(r, pk)};
            }
            case DomainKind::Quad: return {detail::frac(m.u), detail::frac(m.v)};
        }
        return m;
    }

    DivElem make(const FieldElem& a, const FieldElem& m) const {
        if (!in_domain(base_, a)) throw Error(ErrorCode::UnknownElement, philab::to_string(base_, a) + " is not in " + base_.label());
        return {a, reduce(m)};
    }

    DivElem zero() const { return {}; }
    DivElem one() const { return {FieldElem(1), {}}; }

    DivElem add(const DivElem& x, const DivElem& y) const {
        if (!divisible()) return {x.a + y.a, x.m + y.m};
        return {x.a + y.a, {detail::frac_add(x.m.u, y.m.u), detail::frac_add(x.m.v, y.m.v)}};
    }
    DivElem neg(const DivElem& x) const { return {-x.a, reduce(-x.m)}; }
    DivElem sub(const DivElem& x, const DivElem& y) const { return add(x, neg(y)); }
    DivElem mul(const DivElem& x, const DivElem& y) const {
        if (!divisible()) return {philab::mul(base_, x.a, y.a), philab::mul(base_, x.a, y.m) + philab::mul(base_, y.a, x.m)};
        const FieldElem s = act(x.a, y.m), t = act(y.a, x.m);
        return {philab::mul(base_, x.a, y.a), {detail::frac_add(s.u, t.u), detail::frac_add(s.v, t.v)}};
    }

    /// a·m reduced modulo D for a canonical module element m, computed
    /// residue by residue.
    FieldElem act(const FieldElem& a, const FieldElem& m) const {
        switch (base_.kind()) {
            case DomainKind::Int: return {detail::frac_mul(a.u.numerator(), m.u)};
            case DomainKind::IntLoc: {
                const Int pk = m.u.denominator();
                if (pk == 1) return {};
                const Int s = detail::mod_floor(a.u.numerator(), pk);
                const Int inv = detail::inverse_mod(a.u.denominator(), pk);
                const __int128 r = static_cast<__int128>(s) * inv % pk * detail::mod_floor(m.u.numerator(), pk) % pk;
                return {Rational(static_cast<Int>(r), pk)};
            }
            case DomainKind::Quad: {
                // (x + yθ)(u + vθ) = (xu + c·yv) + (xv + yu + t·yv)θ
                const Int x = a.u.numerator(), y = a.v.numerator();
                const Rational u0 = detail::frac_add(detail::frac_mul(x, m.u),
                                                     detail::frac_mul(detail::checked_mul(y, base_.theta_const()), m.v));
                const Rational v0 = detail::frac_add(
                    detail::frac_add(detail::frac_mul(x, m.v), detail::frac_mul(y, m.u)),
                    detail::frac_mul(detail::checked_mul(y, base_.theta_trace()), m.v));
                return {u0, v0};
            }
        }
        return {};
    }

    bool is_nil(const DivElem& x) const { return x.a.is_zero(); }

    ElemPredicates predicates(const DivElem& x) const {
        ElemPredicates p;
        p.is_nilpotent = x.a.is_zero();
        p.is_unit = is_unit(base_, x.a);
        if (p.is_unit) {
            // (a, m)^{-1} = (a^{-1}, -m·a^{-2})
            const FieldElem ai = inverse(base_, x.a);
            p.inverse = make(ai, -philab::mul(base_, x.m, philab::mul(base_, ai, ai)));
            return p;
        }
        if (x.a.is_zero()) {
            // (0, m)·(0, n) = 0 for every n
            p.is_zerodivisor = true;
            p.zerodivisor_witness = divisible() ? make({}, FieldElem(Rational(1, small_nonunit_int()))) : make({}, FieldElem(1));
            return p;
        }
        if (divisible()) {
            // a·(1/a) = 1 ≡ 0 in K/D and 1/a ∉ D for a non-unit
            p.is_zerodivisor = true;
            p.zerodivisor_witness = make({}, inverse(base_, x.a));
        }
        return p;
    }

    std::string to_string(const DivElem& x) const {
        return "(" + philab::to_string(base_, x.a) + ", " + philab::to_string(base_, x.m) + ")";
    }

    /// Smallest prime that is not a unit of D (p for ℤ_(p), else 2).
    Int small_nonunit_int() const { return base_.kind() == DomainKind::IntLoc ? base_.p() : 2; }

    /// Seeded element draws. Heights stay at 2^16 for ℤ and ℤ_(p) and at 2^8
    /// for quadratic bases so products stay inside int64.
    Int height() const { return base_.kind() == DomainKind::Quad ? (1 << 8) : (1 << 16); }

    FieldElem sample_base(SeededRng& rng) const {
        const Int h = height();
        switch (base_.kind()) {
            case DomainKind::Int: return {Rational(rng.between(-h, h))};
            case DomainKind::IntLoc: {
                Int den = 1 + static_cast<Int>(rng.below(static_cast<std::uint64_t>(h)));
                while (den % base_.p() == 0) den /= base_.p();
                return {Rational(rng.between(-h, h), den)};
            }
            case DomainKind::Quad: return {Rational(rng.between(-h, h)), Rational(rng.between(-h, h))};
        }
        return {};
    }

    FieldElem sample_module(SeededRng& rng) const {
        if (!divisible()) return sample_base(rng);
        const Int h = height();
        switch (base_.kind()) {
            case DomainKind::Int: {
                const Int den = 1 + static_cast<Int>(rng.below(static_cast<std::uint64_t>(h)));
                return reduce({Rational(static_cast<Int>(rng.below(static_cast<std::uint64_t>(den))), den)});
            }
            case DomainKind::IntLoc: {
                Int pk = 1;
                const Int e = static_cast<Int>(rng.below(17));
                for (Int i = 0; i < e && detail::checked_mul(pk, base_.p()) <= h; ++i) pk *= base_.p();
                return reduce({Rational(static_cast<Int>(rng.below(static_cast<std::uint64_t>(pk))), pk)});
            }
            case DomainKind::Quad: {
                const Int d1 = 1 + static_cast<Int>(rng.below(static_cast<std::uint64_t>(h)));
                const Int d2 = 1 + static_cast<Int>(rng.below(static_cast<std::uint64_t>(h)));
                return reduce({Rational(static_cast<Int>(rng.below(static_cast<std::uint64_t>(d1))), d1),
                               Rational(static_cast<Int>(rng.below(static_cast<std::uint64_t>(d2))), d2)});
            }
        }
        return {};
    }

    DivElem sample(SeededRng& rng) const { return make(sample_base(rng), sample_module(rng)); }

    DivElem sample_nonnil(SeededRng& rng) const {
        for (;;) {
            auto x = sample(rng);
            if (!x.a.is_zero()) return x;
        }
    }

    DivElem sample_nil(SeededRng& rng) const { return {{}, sample_module(rng)}; }

    /// z ∈ x·R, decided exactly. For x = (c, n) with c ≠ 0 this is c | b
    /// (the module part is then solvable by divisibility); for c = 0 it is
    /// b = 0 and k ∈ n·D + D.
    bool in_principal(const DivElem& z, const DivElem& x) const {
        if (!x.a.is_zero()) {
            if (!divides(base_, x.a, z.a)) return false;
            if (divisible()) return true;
            // self module: need r ∈ D with c·r = k - s·n
            const FieldElem s = philab::mul(base_, z.a, inverse(base_, x.a));
            return divides(base_, x.a, z.m - philab::mul(base_, s, x.m));
        }
        if (!z.a.is_zero()) return false;
        if (divisible()) return DomIdeal::generated(base_, {x.m, FieldElem(1)}).contains(z.m);
        return x.m.is_zero() ? z.m.is_zero() : divides(base_, x.m, z.m);
    }

    /// An s with x·s = z when z ∈ xR (used to certify memberships).
    std::optional<DivElem> principal_cofactor(const DivElem& z, const DivElem& x) const {
        if (!in_principal(z, x)) return std::nullopt;
        if (!x.a.is_zero()) {
            const FieldElem s = philab::mul(base_, z.a, inverse(base_, x.a));
            const FieldElem r = philab::mul(base_, z.m - philab::mul(base_, s, x.m), inverse(base_, x.a));
            return DivElem{s, reduce(r)};
        }
        return std::nullopt;
    }

private:
    Domain base_;
    ModuleTag tag_;
};

}  // namespace philab
