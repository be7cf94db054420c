#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "philab/dividedext/ring.hpp"
#include "philab/domainkit/oracles.hpp"

namespace philab {

/// A nonnil ideal J ⋉ M of D ⋉ K/D, J ≠ 0. Every nonnil ideal has this
/// form because Nil(R) = 0 ⋉ M is divided.
class NonnilIdeal {
public:
    NonnilIdeal(DividedExtRing ring, DomIdeal base) : ring_(std::move(ring)), base_(std::move(base)) {
        if (!ring_.divisible())
            throw Error(ErrorCode::UnsupportedFamily, "nonnil pullback calculus needs a divisible module (" + ring_.label() + ")");
        if (base_.is_zero()) throw Error(ErrorCode::NotNonnil, "J = 0 gives an ideal inside Nil(R)");
        if (!(base_.domain() == ring_.base())) throw Error(ErrorCode::MixedDomains, "base ideal over the wrong domain");
        if (!base_.is_integral()) throw Error(ErrorCode::NotContained, base_.to_string() + " is not an ideal of D");
    }

    const DividedExtRing& ring() const { return ring_; }
    const DomIdeal& base() const { return base_; }

    bool contains(const DivElem& x) const { return base_.contains(x.a); }
    bool is_subset_of(const NonnilIdeal& o) const {
        require_same(*this, o);
        return base_.is_subset_of(o.base_);
    }
    bool is_whole() const { return base_.is_unit_ideal(); }

    bool operator==(const NonnilIdeal& o) const { return ring_ == o.ring_ && base_ == o.base_; }
    bool operator<(const NonnilIdeal& o) const { return base_ < o.base_; }

    std::string to_string() const { return base_.to_string() + "⋉M"; }

    static void require_same(const NonnilIdeal& x, const NonnilIdeal& y) {
        if (!(x.ring_ == y.ring_)) throw Error(ErrorCode::MixedRings, x.ring_.label() + " vs " + y.ring_.label());
    }

private:
    DividedExtRing ring_;
    DomIdeal base_;
};

/// Ideal generated by the given elements, which must include a non-nil one.
inline NonnilIdeal nonnil_span(const DividedExtRing& R, const std::vector<DivElem>& gens) {
    std::vector<FieldElem> as;
    for (const auto& g : gens)
        if (!g.a.is_zero()) as.push_back(g.a);
    if (as.empty()) throw Error(ErrorCode::NotNonnil, "all generators are nilpotent");
    return NonnilIdeal(R, DomIdeal::generated(R.base(), as));
}

inline NonnilIdeal nonnil_sum(const NonnilIdeal& I, const NonnilIdeal& J) {
    NonnilIdeal::require_same(I, J);
    return NonnilIdeal(I.ring(), ideal_sum(I.base(), J.base()));
}

inline NonnilIdeal nonnil_intersection(const NonnilIdeal& I, const NonnilIdeal& J) {
    NonnilIdeal::require_same(I, J);
    return NonnilIdeal(I.ring(), ideal_intersection(I.base(), J.base()));
}

/// (J⋉M)(J'⋉M) = JJ' ⋉ (JM + J'M) = JJ' ⋉ M.
inline NonnilIdeal nonnil_product(const NonnilIdeal& I, const NonnilIdeal& J) {
    NonnilIdeal::require_same(I, J);
    return NonnilIdeal(I.ring(), ideal_product(I.base(), J.base()));
}

/// ((I⋉M) : (J⋉M)) = (I :_D J) ⋉ M.
inline NonnilIdeal nonnil_residual(const NonnilIdeal& I, const NonnilIdeal& J) {
    NonnilIdeal::require_same(I, J);
    return NonnilIdeal(I.ring(), residual(I.base(), J.base()));
}

struct NonnilCalc {
    NonnilIdeal sum;
    NonnilIdeal intersection;
    NonnilIdeal product;
    NonnilIdeal residual;
};

inline NonnilCalc nonnil_calc(const NonnilIdeal& I, const NonnilIdeal& J) {
    return {nonnil_sum(I, J), nonnil_intersection(I, J), nonnil_product(I, J), nonnil_residual(I, J)};
}

/// Nonnil ideals with bounded base ideals: gℤ for g ≤ bound, p^k for
/// k ≤ bound, HNF lattices of norm ≤ bound.
inline std::vector<NonnilIdeal> enumerate_nonnil(const DividedExtRing& R, Int bound) {
    std::vector<NonnilIdeal> out;
    for (auto& J : enumerate_dom_ideals(R.base(), bound)) out.emplace_back(R, std::move(J));
    return out;
}

/// Prime and maximal tests for nonnil ideals over ℤ and ℤ_(p): R/(J⋉M) ≅ D/J.
inline bool nonnil_is_prime(const NonnilIdeal& I) {
    const auto& D = I.ring().base();
    switch (D.kind()) {
        case DomainKind::Int: return detail::is_prime_int(I.base().generator().numerator());
        case DomainKind::IntLoc: return I.base().exponent() == 1;
        case DomainKind::Quad: break;
    }
    throw Error(ErrorCode::UnsupportedFamily, "prime test for quadratic bases");
}

inline bool nonnil_is_maximal(const NonnilIdeal& I) { return nonnil_is_prime(I); }

/// |R/(J⋉M)| = [D : J], finite for ℤ and quadratic bases.
inline Int quotient_order(const NonnilIdeal& I) {
    const auto& D = I.ring().base();
    if (D.kind() == DomainKind::IntLoc) {
        Int n = 1;
        for (Int k = 0; k < I.base().exponent(); ++k) n = detail::checked_mul(n, D.p());
        return n;
    }
    return I.base().norm().numerator();
}

struct DividedCheck {
    bool holds = false;
    bool sampled = false;
    std::size_t samples = 0;
    std::string witness;
    std::string method;
};

/// Is Nil(R) = 0⋉M comparable to every ideal? For K/D it suffices that each
/// nil element lies in every principal ideal of a non-nil element; this is
/// verified on `budget` seeded pairs by solving a·y = n and multiplying back.
/// For D⋉D a failure is searched for over small non-units.
inline DividedCheck divided_check(const DividedExtRing& R, std::size_t budget, std::uint64_t seed) {
    if (R.divisible()) {
        SeededRng rng(seed);
        for (std::size_t s = 0; s < budget; ++s) {
            const auto x = R.sample_nonnil(rng);
            const auto n = R.sample_nil(rng);
            const DivElem y{{}, R.reduce(philab::mul(R.base(), n.m, inverse(R.base(), x.a)))};
            if (!(R.mul(x, y) == n))
                return {false, true, s + 1, R.to_string(n) + " ∉ " + R.to_string(x) + "R", "sampled"};
        }
        return {true, true, budget, "",
                "sampled(seed=" + std::to_string(seed) + ",budget=" + std::to_string(budget) + ")"};
    }
    for (Int c = 2; c <= 64; ++c) {
        const DivElem x = R.make(FieldElem(c), {});
        if (is_unit(R.base(), x.a)) continue;
        const DivElem n = R.make({}, FieldElem(1));
        if (!R.in_principal(n, x) && !R.in_principal(x, n))
            return {false, false, static_cast<std::size_t>(c - 1), R.to_string(n) + " ∉ " + R.to_string(x) + "R", "exhaustive"};
    }
    return {true, false, 63, "", "no failure among (c, 0), c <= 64"};
}

struct AnnihilatorReport {
    bool y_in_ann_x = false;
    bool x_in_ann_y = false;
    std::size_t samples_ann_x = 0;
    std::size_t samples_ann_y = 0;
    std::size_t failures = 0;
    std::string witness;

    bool holds() const { return y_in_ann_x && x_in_ann_y && failures == 0; }
};

/// Elements of Ann(x), drawn from its exact description:
/// a ≠ 0: Ann(a, m) = {(0, t/a) : t ∈ D};
/// a = 0: Ann(0, m) = {(b, k) : b·m ∈ D}.
inline DivElem sample_annihilator(const DividedExtRing& R, const DivElem& x, SeededRng& rng) {
    const auto& D = R.base();
    if (!x.a.is_zero()) return R.make({}, philab::mul(D, R.sample_base(rng), inverse(D, x.a)));
    if (x.m.is_zero()) return R.sample(rng);
    const auto cond = residual(DomIdeal::unit(D), DomIdeal::principal(D, x.m));
    FieldElem b;
    for (const auto& g : cond.generators()) b = b + philab::mul(D, g, FieldElem(Rational(rng.between(-R.height(), R.height()))));
    return R.make(b, R.sample_module(rng));
}

/// Checks Ann(x) = yR and Ann(y) = xR: the two generator memberships
/// exactly, then `budget` seeded annihilator elements against each
/// principal ideal.
inline AnnihilatorReport annihilator_membership(const DividedExtRing& R, const DivElem& x, const DivElem& y,
                                                std::size_t budget, std::uint64_t seed) {
    AnnihilatorReport rep;
    rep.y_in_ann_x = R.mul(x, y) == R.zero();
    rep.x_in_ann_y = R.mul(y, x) == R.zero();
    SeededRng rng(seed);
    auto sweep = [&](const DivElem& u, const DivElem& v, std::size_t& count) {
        for (std::size_t s = 0; s < budget; ++s) {
            const auto z = sample_annihilator(R, u, rng);
            if (!(R.mul(u, z) == R.zero()))
                throw Error(ErrorCode::InternalInconsistency, R.to_string(z) + " sampled outside Ann" + R.to_string(u));
            ++count;
            if (!R.in_principal(z, v)) {
                if (rep.failures++ == 0) rep.witness = R.to_string(z) + " ∈ Ann" + R.to_string(u) + " but ∉ " + R.to_string(v) + "R";
            }
        }
    };
    sweep(x, y, rep.samples_ann_x);
    sweep(y, x, rep.samples_ann_y);
    return rep;
}

}  // namespace philab
