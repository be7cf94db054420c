#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "philab/domainkit/ideal.hpp"

namespace philab {

inline constexpr Int kDefaultNormBound = 64;
inline constexpr Int kDefaultGeneratorBound = 30;
inline constexpr Int kDefaultExponentBound = 20;

/// Answer from a domain-level oracle, with the reasoning that produced it.
struct Finding {
    bool holds = false;
    std::string witness;
    std::string method;
};

/// Nonzero integral ideals up to a size bound, in ascending order:
/// gℤ for 1 ≤ g ≤ bound, p^k for 0 ≤ k ≤ bound, HNF lattices of norm ≤ bound.
inline std::vector<DomIdeal> enumerate_dom_ideals(const Domain& D, Int bound) {
    std::vector<DomIdeal> out;
    switch (D.kind()) {
        case DomainKind::Int:
            for (Int g = 1; g <= bound; ++g) out.push_back(DomIdeal::integer(D, g));
            break;
        case DomainKind::IntLoc:
            for (Int k = 0; k <= bound; ++k) out.push_back(DomIdeal::power(D, k));
            break;
        case DomainKind::Quad:
            for (Int c = 1; c <= bound; ++c)
                for (Int a = c; a * c <= bound; a += c)
                    for (Int b = 0; b < a; b += c) {
                        try {
                            auto I = DomIdeal::lattice(D, {{a, 0}, {b, c}});
                            if (I.hnf().a == a && I.hnf().c == c && I.hnf().b == b && I.hnf().den == 1) out.push_back(I);
                        } catch (const Error& e) {
                            if (e.code() != ErrorCode::InvalidModule) throw;
                        }
                    }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// I·(D:I) = D; the witness is the product lattice.
inline Finding is_invertible_ideal(const DomIdeal& I) {
    if (I.is_zero()) throw Error(ErrorCode::ZeroIdeal, "invertibility of the zero ideal");
    const auto product = ideal_product(I, colon(DomIdeal::unit(I.domain()), I));
    const bool ok = product.is_unit_ideal();
    std::string w = "I(D:I) = " + product.to_string();
    if (I.domain().kind() == DomainKind::Quad) w += " " + product.hnf_string();
    return {ok, w, "exhaustive"};
}

/// First non-invertible ideal of norm ≤ bound, if any.
inline std::optional<DomIdeal> find_non_invertible(const Domain& D, Int norm_bound) {
    for (const auto& I : enumerate_dom_ideals(D, norm_bound))
        if (!is_invertible_ideal(I).holds) return I;
    return std::nullopt;
}

/// Prüfer test. PIDs are immediate; a quadratic order is Prüfer iff it is
/// maximal (f = 1), cross-checked against invertibility of every ideal of
/// norm ≤ norm_bound.
inline Finding is_prufer_domain(const Domain& D, Int norm_bound = kDefaultNormBound) {
    if (D.kind() != DomainKind::Quad) return {true, "", "principal ideal domain"};
    const auto bad = find_non_invertible(D, norm_bound);
    const bool maximal = D.f() == 1;
    if (maximal == bad.has_value())
        throw Error(ErrorCode::InternalInconsistency,
                    D.label() + ": conductor test and invertibility search disagree");
    if (maximal) return {true, "", "maximal order; all ideals of norm <= " + std::to_string(norm_bound) + " invertible"};
    return {false, bad->to_string() + " is not invertible", "conductor " + std::to_string(D.f()) + " > 1; bounded(norm<=" + std::to_string(norm_bound) + ")"};
}

inline Finding is_valuation_domain(const Domain& D) {
    switch (D.kind()) {
        case DomainKind::IntLoc: return {true, "", "discrete valuation ring"};
        case DomainKind::Int: return {false, "2Z ⊄ 3Z ⊄ 2Z", "incomparable principal ideals"};
        case DomainKind::Quad: {
            const auto two = DomIdeal::principal(D, FieldElem(2)), three = DomIdeal::principal(D, FieldElem(3));
            if (two.is_subset_of(three) || three.is_subset_of(two))
                throw Error(ErrorCode::InternalInconsistency, "(2) and (3) comparable in " + D.label());
            return {false, "(2) vs (3): " + two.hnf_string() + " and " + three.hnf_string() + " incomparable",
                    "HNF comparability"};
        }
    }
    return {};
}

namespace detail {

inline const std::vector<Int>& real_class_number_one() {
    static const std::vector<Int> table = {2,  3,  5,  6,  7,  11, 13, 14, 17, 19, 21, 22, 23, 29, 31, 33, 37, 38, 41,
                                           43, 46, 47, 53, 57, 59, 61, 62, 67, 69, 71, 73, 77, 83, 86, 89, 93, 94, 97};
    return table;
}

inline constexpr Int kImaginaryRange = 200;
inline constexpr Int kRealRange = 100;

/// Imaginary maximal order: an integral ideal is principal iff it holds an
/// element whose norm equals the ideal norm.
inline bool is_principal_imaginary(const DomIdeal& I) {
    const auto& D = I.domain();
    const auto& l = I.hnf();
    const Int N = I.norm().numerator();
    const Int t = D.theta_trace();
    const double disc = static_cast<double>(-D.discriminant());  // |Δ| = -(t² + 4c)
    const Int wmax = static_cast<Int>(std::sqrt(4.0 * N / disc)) + 1;
    const Int root = static_cast<Int>(std::sqrt(static_cast<double>(N))) + 1;
    for (Int y = -wmax / l.c - 1; y <= wmax / l.c + 1; ++y) {
        const Int w = y * l.c;
        const Int centre = -(t * w) / 2;
        for (Int u = centre - root - 1; u <= centre + root + 1; ++u) {
            if (mod_floor(u - y * l.b, l.a) != 0) continue;
            if (u * u + t * u * w - D.theta_const() * w * w == N) return true;
        }
    }
    return false;
}

}  // namespace detail

/// Class number one for a maximal quadratic order: imaginary fields by
/// checking every ideal below the Minkowski bound, real fields by table.
inline Finding class_number_one(const Domain& D) {
    if (D.kind() != DomainKind::Quad || D.f() != 1)
        throw Error(ErrorCode::UnsupportedFamily, "class number is computed for maximal quadratic orders only");
    if (D.d() < 0) {
        if (-D.d() > detail::kImaginaryRange)
            throw Error(ErrorCode::OutOfTableRange, "|d| > " + std::to_string(detail::kImaginaryRange));
        const double minkowski = 2.0 / M_PI * std::sqrt(static_cast<double>(-D.discriminant()));
        const Int bound = static_cast<Int>(std::floor(minkowski));
        for (const auto& I : enumerate_dom_ideals(D, std::max<Int>(bound, 1)))
            if (!detail::is_principal_imaginary(I))
                return {false, I.to_string() + " is not principal", "Minkowski bound " + std::to_string(bound)};
        return {true, "", "Minkowski bound " + std::to_string(bound)};
    }
    if (D.d() > detail::kRealRange)
        throw Error(ErrorCode::OutOfTableRange, "d > " + std::to_string(detail::kRealRange));
    const auto& t = detail::real_class_number_one();
    const bool one = std::find(t.begin(), t.end(), D.d()) != t.end();
    return {one, one ? "" : "class number > 1", "real quadratic table"};
}

struct DomainTraits {
    Finding is_bezout;
    Finding is_semilocal;
};

inline DomainTraits traits(const Domain& D) {
    switch (D.kind()) {
        case DomainKind::Int:
            return {{true, "", "principal ideal domain"}, {false, "2Z, 3Z, 5Z, ... are distinct maximal ideals", "infinitely many primes"}};
        case DomainKind::IntLoc:
            return {{true, "", "principal ideal domain"}, {true, "unique maximal ideal " + std::to_string(D.p()) + "^1", "local"}};
        case DomainKind::Quad: {
            const Finding semilocal{false, "infinitely many maximal ideals", "infinitely many primes"};
            const bool in_range = D.d() < 0 ? -D.d() <= detail::kImaginaryRange : D.d() <= detail::kRealRange;
            if (!in_range) throw Error(ErrorCode::OutOfTableRange, D.label() + " outside the class-number range");
            if (D.f() != 1) {
                auto bad = find_non_invertible(D, kDefaultNormBound);
                return {{false, bad ? bad->to_string() + " is not invertible" : "order not integrally closed",
                         "non-maximal order"},
                        semilocal};
            }
            auto h = class_number_one(D);
            return {{h.holds, h.witness, "class number one; " + h.method}, semilocal};
        }
    }
    return {};
}

}  // namespace philab
