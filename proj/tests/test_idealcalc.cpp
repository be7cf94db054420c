#include <gtest/gtest.h>

#include <numeric>

#include "philab/finring/construct.hpp"
#include "philab/idealcalc/lattice.hpp"
#include "support/iso.hpp"

using namespace philab;

namespace {

FiniteIdeal gen(const RingPtr& r, std::initializer_list<Elem> gs) { return span(r, std::vector<Elem>(gs)); }

std::vector<Elem> multiples_mod(int n, int g) {
    std::vector<Elem> out;
    for (int x = 0; x < n; ++x)
        if (x % std::gcd(n, g) == 0) out.push_back(static_cast<Elem>(x));
    return out;
}

int divisor_count(int n) {
    int c = 0;
    for (int d = 1; d <= n; ++d) c += (n % d == 0);
    return c;
}

std::vector<RingPtr> axiom_corpus() {
    return {make_zn(8),
            make_zn(12),
            make_zn(16),
            make_truncated_poly(2, {2, 2}),
            make_truncated_poly(3, {2}),
            make_product(make_zn(2), make_zn(4)),
            make_trivial_ext(make_zn(4), make_cyclic_module(make_zn(4), 2))};
}

}  // namespace

TEST(Span, Z8Generator2) { EXPECT_EQ(gen(make_zn(8), {2}).members().elements(), (std::vector<Elem>{0, 2, 4, 6})); }

TEST(Span, ExampleRingXYIsNilradical) {
    auto r = make_truncated_poly(2, {2, 2});
    EXPECT_EQ(span(r, {*r->find("x"), *r->find("y")}).members(), r->nilpotents());
}

TEST(Span, EmptyIsZero) {
    for (int n : {2, 7, 12}) EXPECT_TRUE(span(make_zn(n), {}).is_zero());
}

TEST(Span, MatchesGcdOracleInZn) {
    for (int n = 2; n <= 30; ++n) {
        auto r = make_zn(n);
        for (int g = 0; g < n; ++g) EXPECT_EQ(gen(r, {static_cast<Elem>(g)}).members().elements(), multiples_mod(n, g));
    }
}

TEST(LatticeOps, Z12Examples) {
    auto r = make_zn(12);
    auto ops = lattice_ops(gen(r, {4}), gen(r, {6}));
    EXPECT_TRUE(ops.intersection.is_zero());
    EXPECT_EQ(ops.sum, gen(r, {2}));
    EXPECT_EQ(ideal_product(gen(r, {2}), gen(r, {3})), gen(r, {6}));
    EXPECT_EQ(ideal_sum(gen(r, {4}), zero_ideal(r)), gen(r, {4}));
}

TEST(LatticeOps, MixedRingsRejected) {
    auto a = make_zn(4), b = make_zn(4);
    try {
        ideal_sum(zero_ideal(a), zero_ideal(b));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedRings);
    }
    EXPECT_THROW(residual(zero_ideal(a), zero_ideal(b)), Error);
}

TEST(Residual, Examples) {
    auto z8 = make_zn(8);
    EXPECT_EQ(residual(gen(z8, {4}), gen(z8, {2})), gen(z8, {2}));
    auto z12 = make_zn(12);
    EXPECT_EQ(residual(gen(z12, {4}), gen(z12, {6})), gen(z12, {2}));
    for (const auto& i : enumerate_ideals(z12)) EXPECT_EQ(residual(i, unit_ideal(z12)), i);
}

TEST(EnumerateIdeals, CountsMatchDivisorOracle) {
    for (int n = 2; n <= 40; ++n) EXPECT_EQ(enumerate_ideals(make_zn(n)).size(), static_cast<std::size_t>(divisor_count(n))) << n;
}

TEST(EnumerateIdeals, FieldHasTwo) {
    EXPECT_EQ(enumerate_ideals(make_zn(7)).size(), 2u);
    EXPECT_EQ(enumerate_ideals(make_truncated_poly(3, {1})).size(), 2u);
}

TEST(EnumerateIdeals, BudgetExceeded) {
    auto r = make_truncated_poly(2, {2, 2});
    try {
        enumerate_ideals(r, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
    // the memoized list is still subject to the budget
    EXPECT_NO_THROW(enumerate_ideals(r));
    EXPECT_THROW(enumerate_ideals(r, 3), Error);
}

TEST(EnumerateIdeals, EveryEntryIsAnIdealAndListIsClosed) {
    for (const auto& r : axiom_corpus()) {
        const auto ideals = enumerate_ideals(r);
        auto listed = [&](const FiniteIdeal& i) { return std::find(ideals.begin(), ideals.end(), i) != ideals.end(); };
        for (const auto& i : ideals) {
            ASSERT_TRUE(is_ideal_set(*r, i.members())) << r->label();
            for (const auto& j : ideals) {
                EXPECT_TRUE(listed(ideal_sum(i, j)));
                EXPECT_TRUE(listed(ideal_intersection(i, j)));
                EXPECT_TRUE(listed(ideal_product(i, j)));
                EXPECT_TRUE(listed(residual(i, j)));
            }
        }
    }
}

TEST(Predicates, Z8TwoIsDivided) {
    auto r = make_zn(8);
    EXPECT_TRUE(is_divided(gen(r, {2})).holds);
    EXPECT_TRUE(is_prime(gen(r, {2})).holds);
    EXPECT_TRUE(is_maximal(gen(r, {2})).holds);
}

TEST(Predicates, Z6ZeroNotPrime) {
    auto r = make_zn(6);
    auto d = is_prime(zero_ideal(r));
    EXPECT_FALSE(d.holds);
    EXPECT_EQ(d.witness.substr(0, 5), "2*3=0");
}

TEST(Predicates, Z12SixReducible) {
    auto r = make_zn(12);
    auto d = is_irreducible(gen(r, {6}));
    EXPECT_FALSE(d.holds);
    EXPECT_NE(d.witness.find("∩"), std::string::npos);
    EXPECT_FALSE(is_primary(gen(r, {6})).holds);
    EXPECT_TRUE(is_primary(gen(r, {4})).holds);
    EXPECT_TRUE(is_irreducible(gen(r, {4})).holds);
}

TEST(Predicates, Nonnil) {
    auto r = make_zn(8);
    EXPECT_FALSE(is_nonnil(gen(r, {4})).holds);
    EXPECT_TRUE(is_nonnil(unit_ideal(r)).holds);
    auto all = predicates(gen(make_zn(12), {3}));
    EXPECT_TRUE(all.is_prime.holds);
    EXPECT_TRUE(all.is_nonnil.holds);
    EXPECT_FALSE(all.is_divided.holds);
}

TEST(Properties, ResidualAdjunction) {
    for (const auto& r : axiom_corpus()) {
        const auto ideals = enumerate_ideals(r);
        for (const auto& i : ideals)
            for (const auto& j : ideals)
                for (const auto& k : ideals)
                    EXPECT_EQ(ideal_product(j, k).is_subset_of(i), k.is_subset_of(residual(i, j))) << r->label();
    }
}

TEST(Properties, OneSidedDistributiveInclusion) {
    for (const auto& r : axiom_corpus()) {
        const auto ideals = enumerate_ideals(r);
        for (const auto& i : ideals)
            for (const auto& j : ideals)
                for (const auto& k : ideals) {
                    auto lhs = ideal_sum(ideal_intersection(i, j), ideal_intersection(i, k));
                    EXPECT_TRUE(lhs.is_subset_of(ideal_intersection(i, ideal_sum(j, k))));
                }
    }
}

TEST(Properties, PrimaryHasPrimeRadical) {
    for (const auto& r : axiom_corpus())
        for (const auto& q : enumerate_ideals(r))
            if (is_primary(q).holds) EXPECT_TRUE(is_prime(radical(q)).holds) << r->label() << " " << q.to_string();
}

TEST(LocalizeAt, Z12AtTwo) {
    auto r = make_zn(12);
    EXPECT_EQ(localization_kernel(gen(r, {2})).members().elements(), (std::vector<Elem>{0, 4, 8}));
    auto q = localize_at(gen(r, {2}));
    EXPECT_TRUE(testsupport::isomorphic(q.ring, make_zn(4)));
}

TEST(LocalizeAt, Z12AtThree) {
    auto r = make_zn(12);
    EXPECT_EQ(localization_kernel(gen(r, {3})).members().elements(), (std::vector<Elem>{0, 3, 6, 9}));
    EXPECT_TRUE(testsupport::isomorphic(localize_at(gen(r, {3})).ring, make_zn(3)));
}

TEST(LocalizeAt, LocalRingAtMaximalIsItself) {
    auto r = make_truncated_poly(2, {2, 2});
    auto q = localize_at(nilradical(r));
    EXPECT_EQ(q.ring->order(), r->order());
}

TEST(LocalizeAt, NotPrime) {
    auto r = make_zn(12);
    try {
        localize_at(gen(r, {6}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPrime);
    }
}

TEST(LocalizeAt, UniversalPropertyOnEveryPrime) {
    for (const auto& r : axiom_corpus())
        for (const auto& p : prime_ideals(r)) {
            auto q = localize_at(p);  // throws InternalInconsistency on failure
            const auto kernel = localization_kernel(p);
            for (Elem x = 0; x < r->order(); ++x) EXPECT_EQ(q.projection[x] == q.ring->zero(), kernel.contains(x));
        }
}
