#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "philab/phiclass/classify.hpp"

namespace philab {

struct FactorizationResult {
    bool exists = false;
    std::string k;        // (I:J)
    std::string product;  // J·(I:J)
    std::string witness;  // set when no K exists
};

namespace detail {

template <class Ideal, class Resid, class Prod, class Sub, class Name>
FactorizationResult factorization(const Ideal& I, const Ideal& J, Resid resid, Prod prod, Sub subset, Name name) {
    if (!subset(I, J)) throw Error(ErrorCode::NotContained, name(I) + " ⊄ " + name(J));
    const auto K = resid(I, J);
    const auto back = prod(J, K);
    FactorizationResult out{back == I, name(K), name(back), {}};
    if (!out.exists)
        out.witness = "J·(I:J) = " + name(back) + " ≠ " + name(I) + "; any K with I = JK lies in (I:J) = " + name(K);
    return out;
}

}  // namespace detail

/// Is I = J·K for some nonnil K? K exists exactly when J·(I:J) = I, and
/// then K = (I:J) works.
inline FactorizationResult check_t2_factorization(const FiniteIdeal& I, const FiniteIdeal& J) {
    detail::require_same_ring(I, J);
    const auto& nil = I.ring()->nilpotents();
    for (const auto* x : {&I, &J})
        if (x->members().is_subset_of(nil)) throw Error(ErrorCode::NotNonnil, x->to_string() + " ⊆ Nil(R)");
    return detail::factorization(
        I, J, [](const auto& a, const auto& b) { return residual(a, b); },
        [](const auto& a, const auto& b) { return ideal_product(a, b); },
        [](const auto& a, const auto& b) { return a.is_subset_of(b); }, [](const auto& a) { return a.to_string(); });
}

inline FactorizationResult check_t2_factorization(const NonnilIdeal& I, const NonnilIdeal& J) {
    NonnilIdeal::require_same(I, J);
    return detail::factorization(
        I, J, [](const auto& a, const auto& b) { return nonnil_residual(a, b); },
        [](const auto& a, const auto& b) { return nonnil_product(a, b); },
        [](const auto& a, const auto& b) { return a.is_subset_of(b); }, [](const auto& a) { return a.to_string(); });
}

struct PrimaryIrreducibleRow {
    Int n = 0;
    bool primary = false;
    bool irreducible = false;
    std::string primary_witness;      // a·b ∈ I, a ∉ I, no power of b in I
    std::string irreducible_witness;  // I = A ∩ B with A, B ⊋ I
};

struct PrimaryIrreducibleReport {
    std::string ring;
    bool vacuous = false;
    bool hypothesis = false;     // nonnil primes are maximal
    bool biconditional = false;  // primary ⟺ irreducible on every row
    std::vector<PrimaryIrreducibleRow> rows;
    std::string note;
};

namespace detail {

/// Element-level primary test for nℤ⋉M, reduced to residues: (a,m)(b,m') ∈ I
/// iff n | ab, membership iff n | a, and b is in the radical iff n | b^k.
inline PrimaryIrreducibleRow primary_row(const DividedExtRing& R, Int n) {
    PrimaryIrreducibleRow row{n, true, true, {}, {}};
    auto power_hits = [n](Int b) {
        Int x = b % n;
        for (Int k = 0; k <= 64; ++k) {
            if (x == 0) return true;
            x = static_cast<Int>((static_cast<__int128>(x) * b) % n);
        }
        return false;
    };
    for (Int a = 1; a < n && row.primary; ++a)
        for (Int b = 1; b < n; ++b)
            if ((a * b) % n == 0 && !power_hits(b)) {
                row.primary = false;
                row.primary_witness = std::to_string(a) + "·" + std::to_string(b) + " ∈ I, " + std::to_string(a) +
                                      " ∉ I, no power of " + std::to_string(b) + " lies in I";
                break;
            }
    // reducible ⟺ n = a·b with coprime a, b > 1; take a the full power of the smallest prime
    Int p = 2;
    while (n % p != 0) ++p;
    Int a = 1;
    for (Int m = n; m % p == 0; m /= p) a *= p;
    const Int b = n / a;
    if (b > 1) {
        const auto& D = R.base();
        const NonnilIdeal A(R, DomIdeal::integer(D, a)), B(R, DomIdeal::integer(D, b)), I(R, DomIdeal::integer(D, n));
        if (!(nonnil_intersection(A, B) == I))
            throw Error(ErrorCode::InternalInconsistency, "coprime split does not intersect to " + I.to_string());
        row.irreducible = false;
        row.irreducible_witness = I.to_string() + " = (" + A.to_string() + ") ∩ (" + B.to_string() + ")";
    }
    return row;
}

}  // namespace detail

/// Primary versus irreducible nonnil ideals nℤ⋉M of ℤ⋉ℚ/ℤ for 2 ≤ n ≤ bound.
/// For a finite φ-ring the only nonnil ideal is R itself and the check is vacuous.
inline PrimaryIrreducibleReport check_primary_irreducible(const AnyRing& r, Int bound) {
    PrimaryIrreducibleReport rep;
    rep.ring = ring_label(r);
    if (const auto* f = std::get_if<RingPtr>(&r)) {
        const auto phi = nil_is_divided_prime(*f);
        if (!phi.holds) throw Error(ErrorCode::UnsupportedFamily, rep.ring + " is not a φ-ring (" + phi.witness + ")");
        rep.vacuous = rep.hypothesis = rep.biconditional = true;
        rep.note = "finite φ-ring: Nil(R) is the only prime, so R is the only nonnil ideal and no proper one exists";
        return rep;
    }
    const auto& R = std::get<DividedExtRing>(r);
    if (R.base().kind() != DomainKind::Int || !R.divisible())
        throw Error(ErrorCode::UnsupportedFamily, "primary/irreducible check needs Z⋉Q/Z, got " + rep.ring);
    rep.hypothesis = rep.biconditional = true;
    for (Int n = 2; n <= bound; ++n) {
        auto row = detail::primary_row(R, n);
        if (row.primary != row.irreducible) rep.biconditional = false;
        const NonnilIdeal I(R, DomIdeal::integer(R.base(), n));
        if (nonnil_is_prime(I) && !nonnil_is_maximal(I)) rep.hypothesis = false;
        rep.rows.push_back(std::move(row));
    }
    rep.note = "nonnil primes pZ⋉M are maximal since R/(pZ⋉M) ≅ Z/p";
    return rep;
}

struct BezoutReport {
    std::string ring;
    bool applicable = false;  // semilocal and φ-Prüfer
    Verdict semilocal;
    Verdict phi_prufer;
    Verdict phi_bezout;
    std::size_t checked = 0;  // 2-generated nonnil ideals examined
    std::string note;
};

/// A semilocal φ-Prüfer ring is φ-Bézout: every 2-generated nonnil ideal is
/// principal.
inline BezoutReport check_t11_bezout(const AnyRing& r, const ClassifyOptions& opt = {}) {
    BezoutReport rep;
    rep.ring = ring_label(r);
    if (auto phi = is_phi_ring(r, opt); phi.value != Truth::True)
        throw Error(ErrorCode::PhiRingRequired, rep.ring + " is not a φ-ring (" + phi.witness + ")");
    const char* cite = "every 2-generated nonnil ideal is principal";

    if (const auto* f = std::get_if<RingPtr>(&r)) {
        const auto& ring = *f;
        rep.semilocal = Verdict::yes("finite", "finitely many maximal ideals");
        rep.phi_prufer = route_consensus(finite_phi_prufer_routes(ring, opt), rep.ring);
        rep.applicable = rep.phi_prufer.value == Truth::True;
        Verdict v = Verdict::yes("exhaustive", cite);
        for (Elem a = 0; a < ring->order() && v.value == Truth::True; ++a)
            for (Elem b = a; b < ring->order(); ++b) {
                const auto s = span(ring, {a, b});
                if (s.members().is_subset_of(ring->nilpotents())) continue;
                ++rep.checked;
                bool found = false;
                for (Elem g : s.members().elements())
                    if (principal(ring, g) == s) {
                        found = true;
                        break;
                    }
                if (!found) {
                    v = Verdict::no("(" + ring->name(a) + ", " + ring->name(b) + ") is not principal", "exhaustive", cite);
                    break;
                }
            }
        rep.phi_bezout = v;
        rep.note = rep.checked > 0 ? "every nonnil 2-generated ideal equals R" : "no nonnil 2-generated ideals";
        return rep;
    }

    const auto& R = std::get<DividedExtRing>(r);
    const auto& D = R.base();
    const auto t = traits(D);
    rep.semilocal = detail::from_finding(t.is_semilocal, "finitely many maximal ideals");
    rep.phi_prufer = route_consensus(divided_phi_prufer_routes(R, opt), rep.ring);
    rep.applicable = t.is_semilocal.holds && rep.phi_prufer.value == Truth::True;
    if (!rep.applicable) {
        rep.phi_bezout = detail::from_finding(t.is_bezout, "R/Nil(R) is a Bézout domain");
        rep.note = "theorem not applicable (" + (t.is_semilocal.holds ? "not φ-Prüfer" : t.is_semilocal.witness) +
                   "); φ-Bézout delegated to the base domain";
        return rep;
    }
    if (D.kind() != DomainKind::IntLoc)
        throw Error(ErrorCode::UnsupportedFamily, "semilocal base other than Z_(p): " + D.label());
    for (Int a = 0; a <= opt.exponent_bound; ++a)
        for (Int b = 0; b <= opt.exponent_bound; ++b) {
            ++rep.checked;
            const NonnilIdeal A(R, DomIdeal::power(D, a)), B(R, DomIdeal::power(D, b));
            const auto sum = nonnil_sum(A, B);
            Int g = 1;
            for (Int k = 0; k < std::min(a, b); ++k) g = detail::checked_mul(g, D.p());
            const auto gen = nonnil_span(R, {R.make(FieldElem(g), {})});
            if (!(sum == gen)) {
                rep.phi_bezout = Verdict::no(A.to_string() + " + " + B.to_string() + " = " + sum.to_string() +
                                                 " is not generated by (" + std::to_string(g) + ", 0)",
                                             "exponent calculus", cite);
                return rep;
            }
        }
    rep.phi_bezout = Verdict::up_to_bound("exponent calculus(a,b<=" + std::to_string(opt.exponent_bound) + ")", cite);
    rep.note = "p^a⋉M + p^b⋉M = p^min(a,b)⋉M";
    return rep;
}

}  // namespace philab
