#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "philab/core/rng.hpp"
#include "philab/domainkit/oracles.hpp"

using namespace philab;

namespace {

const Domain kZ = Domain::integers();
const Domain kZ2 = Domain::localized(2);
const Domain kGauss = Domain::quadratic(-1, 1);
const Domain kZ2i = Domain::quadratic(-1, 2);

FieldElem q(Int u, Int v) { return FieldElem(Rational(u), Rational(v)); }

// In ℤ[2i] the basis element θ is 2i; in ℤ[i] it is i.
FieldElem gaussian(Int re, Int im) { return q(re, im); }

std::vector<Domain> quad_backends() {
    return {kGauss, kZ2i, Domain::quadratic(-5, 1), Domain::quadratic(5, 1), Domain::quadratic(-3, 1),
            Domain::quadratic(2, 1), Domain::quadratic(-3, 3)};
}

}  // namespace

// ---------------------------------------------------------------------------
// dom_ideal_ops
// ---------------------------------------------------------------------------

TEST(DomIdealOps, IntegerSumAndIntersection) {
    auto ops = dom_ideal_ops(DomIdeal::integer(kZ, 4), DomIdeal::integer(kZ, 6));
    EXPECT_EQ(ops.sum, DomIdeal::integer(kZ, 2));
    EXPECT_EQ(ops.intersection, DomIdeal::integer(kZ, 12));
    EXPECT_EQ(ops.product, DomIdeal::integer(kZ, 24));
    EXPECT_EQ(ops.residual, DomIdeal::integer(kZ, 2));
    EXPECT_EQ(ops.sum.to_string(), "2Z");
}

TEST(DomIdealOps, LocalExponents) {
    auto ops = dom_ideal_ops(DomIdeal::power(kZ2, 2), DomIdeal::power(kZ2, 3));
    EXPECT_EQ(ops.sum, DomIdeal::power(kZ2, 2));
    EXPECT_EQ(ops.intersection, DomIdeal::power(kZ2, 3));
    EXPECT_EQ(ops.product, DomIdeal::power(kZ2, 5));
    EXPECT_EQ(ops.residual, DomIdeal::power(kZ2, 0));
    EXPECT_EQ(residual(DomIdeal::power(kZ2, 3), DomIdeal::power(kZ2, 1)), DomIdeal::power(kZ2, 2));
}

TEST(DomIdealOps, Z2iSelfColonIsLargerThanOrder) {
    auto I = DomIdeal::lattice(kZ2i, {{2, 0}, {0, 1}});
    EXPECT_EQ(I.to_string(), "(2, 2i)");
    auto c = colon(I, I);
    const auto order = DomIdeal::unit(kZ2i);
    EXPECT_TRUE(order.is_subset_of(c));
    EXPECT_FALSE(c == order);
    // i = θ/2 lies in the colon but not in ℤ[2i]
    const FieldElem i(Rational(0), Rational(1, 2));
    EXPECT_TRUE(c.contains(i));
    EXPECT_FALSE(in_domain(kZ2i, i));
}

TEST(DomIdealOps, MixedDomainsRejected) {
    try {
        ideal_sum(DomIdeal::integer(kZ, 2), DomIdeal::power(kZ2, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedDomains);
    }
}

TEST(DomIdealOps, ZeroDividendRejected) {
    try {
        residual(DomIdeal::integer(kZ, 2), DomIdeal::zero(kZ));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroIdealResidualDividend);
    }
}

TEST(DomIdealOps, IntegerBackendMatchesGcdArithmetic) {
    for (Int g = 1; g <= 1000; ++g)
        for (Int h = 1; h <= 1000; ++h) {
            const auto I = DomIdeal::integer(kZ, g), J = DomIdeal::integer(kZ, h);
            const Int gcd = std::gcd(g, h);
            ASSERT_EQ(ideal_sum(I, J).generator(), Rational(gcd));
            ASSERT_EQ(ideal_intersection(I, J).generator(), Rational(g / gcd * h));
            ASSERT_EQ(ideal_product(I, J).generator(), Rational(g * h));
            ASSERT_EQ(residual(I, J).generator(), Rational(g / gcd));
        }
}

TEST(DomIdealOps, NonIdealLatticeRejected) {
    // {2x + y(1 + 2i)} is not stable under multiplication by 2i
    try {
        DomIdeal::lattice(kZ2i, {{2, 0}, {1, 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidModule);
    }
}

// ---------------------------------------------------------------------------
// is_invertible_ideal / is_prufer_domain
// ---------------------------------------------------------------------------

TEST(Invertible, Examples) {
    EXPECT_TRUE(is_invertible_ideal(DomIdeal::integer(kZ, 6)).holds);
    auto I = DomIdeal::generated(kGauss, {gaussian(2, 0), gaussian(1, 1)});
    EXPECT_EQ(I, DomIdeal::principal(kGauss, gaussian(1, 1)));
    EXPECT_TRUE(is_invertible_ideal(I).holds);
    auto bad = is_invertible_ideal(DomIdeal::lattice(kZ2i, {{2, 0}, {0, 1}}));
    EXPECT_FALSE(bad.holds);
    EXPECT_NE(bad.witness.find("I(D:I)"), std::string::npos);
    EXPECT_THROW(is_invertible_ideal(DomIdeal::zero(kZ)), Error);
}

TEST(Prufer, Backends) {
    EXPECT_TRUE(is_prufer_domain(kZ).holds);
    EXPECT_TRUE(is_prufer_domain(kZ2).holds);
    EXPECT_TRUE(is_prufer_domain(kGauss).holds);
    auto z2i = is_prufer_domain(kZ2i);
    EXPECT_FALSE(z2i.holds);
    EXPECT_EQ(z2i.witness, "(2, 2i) is not invertible");
}

TEST(Prufer, NonMaximalOrdersHaveNonInvertibleWitness) {
    for (const auto& D : quad_backends()) {
        const auto bad = find_non_invertible(D, kDefaultNormBound);
        EXPECT_EQ(bad.has_value(), D.f() > 1) << D.label();
        EXPECT_EQ(is_prufer_domain(D).holds, D.f() == 1) << D.label();
    }
}

// ---------------------------------------------------------------------------
// is_valuation_domain / traits
// ---------------------------------------------------------------------------

TEST(Valuation, Backends) {
    EXPECT_TRUE(is_valuation_domain(kZ2).holds);
    auto z = is_valuation_domain(kZ);
    EXPECT_FALSE(z.holds);
    EXPECT_EQ(z.witness, "2Z ⊄ 3Z ⊄ 2Z");
    auto g = is_valuation_domain(kGauss);
    EXPECT_FALSE(g.holds);
    EXPECT_EQ(g.witness.substr(0, 10), "(2) vs (3)");
}

TEST(Traits, Backends) {
    auto z = traits(kZ);
    EXPECT_TRUE(z.is_bezout.holds);
    EXPECT_FALSE(z.is_semilocal.holds);
    auto z2 = traits(kZ2);
    EXPECT_TRUE(z2.is_bezout.holds);
    EXPECT_TRUE(z2.is_semilocal.holds);
    auto g = traits(kGauss);
    EXPECT_TRUE(g.is_bezout.holds);
    EXPECT_FALSE(g.is_semilocal.holds);
    EXPECT_FALSE(traits(kZ2i).is_bezout.holds);
    EXPECT_FALSE(traits(Domain::quadratic(-5, 1)).is_bezout.holds);
}

TEST(Traits, OutOfRange) {
    try {
        traits(Domain::quadratic(-239, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfTableRange);
    }
    EXPECT_THROW(traits(Domain::quadratic(101, 1)), Error);
}

// Independent oracle: the imaginary quadratic fields of class number one.
TEST(ClassNumber, ImaginaryMatchesHeegnerList) {
    const std::vector<Int> heegner = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
    for (Int d = -200; d <= -1; ++d) {
        if (!detail::is_squarefree(d)) continue;
        const bool expected = std::find(heegner.begin(), heegner.end(), d) != heegner.end();
        EXPECT_EQ(class_number_one(Domain::quadratic(d, 1)).holds, expected) << d;
    }
}

TEST(ClassNumber, RealTable) {
    EXPECT_TRUE(class_number_one(Domain::quadratic(2, 1)).holds);
    EXPECT_FALSE(class_number_one(Domain::quadratic(10, 1)).holds);
    EXPECT_FALSE(class_number_one(Domain::quadratic(79, 1)).holds);
}

// ---------------------------------------------------------------------------
// properties
// ---------------------------------------------------------------------------

TEST(HnfProperties, NormalizeIsIdempotent) {
    for (const auto& D : quad_backends())
        for (const auto& I : enumerate_dom_ideals(D, 64)) {
            const auto& l = I.hnf();
            EXPECT_EQ(DomIdeal::lattice(D, {{l.a, 0}, {l.b, l.c}}, l.den), I);
            EXPECT_EQ(DomIdeal::from_z_generators(D, I.generators()), I);
        }
}

TEST(HnfProperties, SumAndProductCommutativeAssociative) {
    for (const auto& D : quad_backends()) {
        const auto ideals = enumerate_dom_ideals(D, 200);
        SeededRng rng(split_seed(42, D.label()));
        for (int s = 0; s < 300; ++s) {
            const auto& I = ideals[rng.below(ideals.size())];
            const auto& J = ideals[rng.below(ideals.size())];
            const auto& K = ideals[rng.below(ideals.size())];
            EXPECT_EQ(ideal_sum(I, J), ideal_sum(J, I));
            EXPECT_EQ(ideal_product(I, J), ideal_product(J, I));
            EXPECT_EQ(ideal_sum(ideal_sum(I, J), K), ideal_sum(I, ideal_sum(J, K)));
            EXPECT_EQ(ideal_product(ideal_product(I, J), K), ideal_product(I, ideal_product(J, K)));
            EXPECT_EQ(ideal_intersection(I, J), ideal_intersection(J, I));
        }
    }
}

TEST(HnfProperties, NormMultiplicativeAndInvertibleOnMaximalOrders) {
    for (const auto& D : quad_backends()) {
        if (D.f() != 1) continue;
        const auto ideals = enumerate_dom_ideals(D, 40);
        for (const auto& I : ideals) {
            EXPECT_TRUE(ideal_product(I, colon(DomIdeal::unit(D), I)).is_unit_ideal()) << D.label() << I.to_string();
            for (const auto& J : ideals) EXPECT_EQ(ideal_product(I, J).norm(), I.norm() * J.norm());
        }
    }
}

// Membership oracle: elementwise checks of sum, intersection and colon on a
// grid of small elements.
TEST(HnfProperties, OperationsAgreeWithElementwiseMembership) {
    for (const auto& D : quad_backends()) {
        const auto ideals = enumerate_dom_ideals(D, 12);
        std::vector<FieldElem> grid;
        for (Int u = -8; u <= 8; ++u)
            for (Int v = -8; v <= 8; ++v) grid.push_back(q(u, v));
        for (const auto& I : ideals)
            for (const auto& J : ideals) {
                const auto meet = ideal_intersection(I, J);
                const auto res = residual(I, J);
                for (const auto& x : grid) {
                    EXPECT_EQ(meet.contains(x), I.contains(x) && J.contains(x));
                    bool in_res = true;
                    for (const auto& j : J.generators()) in_res = in_res && I.contains(mul(D, x, j));
                    EXPECT_EQ(res.contains(x), in_res);
                }
                const auto sum = ideal_sum(I, J);
                EXPECT_TRUE(I.is_subset_of(sum) && J.is_subset_of(sum));
                for (const auto& x : I.generators())
                    for (const auto& y : J.generators()) EXPECT_TRUE(ideal_product(I, J).contains(mul(D, x, y)));
            }
    }
}

TEST(Enumerate, GaussianNormCountsMatchRepresentationOracle) {
    // number of ideals of ℤ[i] of norm n = number of (a, b) with a > 0, b ≥ 0, a² + b² = n, divided out by units
    for (Int n = 1; n <= 64; ++n) {
        Int reps = 0;
        for (Int a = -8; a <= 8; ++a)
            for (Int b = -8; b <= 8; ++b) reps += (a * a + b * b == n);
        Int count = 0;
        for (const auto& I : enumerate_dom_ideals(kGauss, 64)) count += (I.norm() == Rational(n));
        EXPECT_EQ(count * 4, reps) << n;
    }
}
