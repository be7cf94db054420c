#include <gtest/gtest.h>

#include <numeric>

#include "philab/finring/construct.hpp"
#include "philab/finring/phi_image.hpp"
#include "support/iso.hpp"

using namespace philab;

namespace {

// Independent oracle: nilpotent residues mod n by integer power scan.
std::vector<Elem> nilpotent_residues(int n) {
    std::vector<Elem> out;
    for (int x = 0; x < n; ++x) {
        long long p = x % n;
        for (int k = 0; k < n && p != 0; ++k) p = (p * x) % n;
        if (p == 0) out.push_back(static_cast<Elem>(x));
    }
    return out;
}

std::vector<RingPtr> small_corpus() {
    std::vector<RingPtr> rings;
    for (int n = 2; n <= 16; ++n) rings.push_back(make_zn(n));
    rings.push_back(make_truncated_poly(2, {2, 2}));
    rings.push_back(make_truncated_poly(2, {2}));
    rings.push_back(make_truncated_poly(3, {2}));
    rings.push_back(make_truncated_poly(2, {3}));
    rings.push_back(make_product(make_zn(2), make_zn(2)));
    rings.push_back(make_product(make_zn(4), make_zn(2)));
    rings.push_back(make_trivial_ext(make_zn(4), make_cyclic_module(make_zn(4), 2)));
    return rings;
}

}  // namespace

// ---------------------------------------------------------------------------
// make_zn
// ---------------------------------------------------------------------------

TEST(MakeZn, FourHasTwoSquaredZero) {
    auto r = make_zn(4);
    EXPECT_EQ(r->mul(2, 2), 0u);
    EXPECT_EQ(r->nilpotents().elements(), (std::vector<Elem>{0, 2}));
    EXPECT_EQ(r->label(), "Zn:4");
}

TEST(MakeZn, SixIsReduced) {
    auto r = make_zn(6);
    EXPECT_EQ(r->nilpotents().elements(), nilpotent_residues(6));
    EXPECT_EQ(r->nilpotents().elements(), (std::vector<Elem>{0}));
}

TEST(MakeZn, RejectsZeroRing) {
    try {
        make_zn(1);
        FAIL() << "expected InvalidOrder";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidOrder);
    }
    EXPECT_THROW(make_zn(0), Error);
}

TEST(MakeZn, CapIsEnforced) {
    try {
        make_zn(300);
        FAIL() << "expected TooLarge";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
    EXPECT_NO_THROW(make_zn(300, 512));
}

// ---------------------------------------------------------------------------
// make_truncated_poly
// ---------------------------------------------------------------------------

TEST(TruncatedPoly, ExampleRingHasOrderSixteen) {
    auto r = make_truncated_poly(2, {2, 2});
    EXPECT_EQ(r->order(), 16u);
    const Elem x = *r->find("x"), y = *r->find("y"), xy = *r->find("x*y");
    EXPECT_EQ(r->mul(x, x), r->zero());
    EXPECT_EQ(r->mul(y, y), r->zero());
    EXPECT_EQ(r->mul(x, y), xy);
    EXPECT_NE(xy, r->zero());
    EXPECT_EQ(r->label(), "trunc:2:2,2");
    EXPECT_EQ(x, 2u);
    EXPECT_EQ(y, 4u);
    EXPECT_EQ(xy, 8u);
}

TEST(TruncatedPoly, SingleVariableSquareZero) {
    auto r = make_truncated_poly(2, {2});
    EXPECT_EQ(r->order(), 4u);
    EXPECT_EQ(r->mul(*r->find("x"), *r->find("x")), r->zero());
}

TEST(TruncatedPoly, ExponentOneCollapsesToField) {
    auto r = make_truncated_poly(3, {1});
    EXPECT_EQ(r->order(), 3u);
    EXPECT_EQ(r->units().count(), 2u);
    EXPECT_TRUE(testsupport::isomorphic(r, make_zn(3)));
}

TEST(TruncatedPoly, Errors) {
    try {
        make_truncated_poly(4, {2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidModulus);
    }
    try {
        make_truncated_poly(2, {3, 3});  // 2^9 = 512 > 256
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}

// ---------------------------------------------------------------------------
// make_trivial_ext
// ---------------------------------------------------------------------------

TEST(TrivialExt, Z2OverZ2IsDualNumbers) {
    auto z2 = make_zn(2);
    auto r = make_trivial_ext(z2, make_cyclic_module(z2, 2));
    EXPECT_EQ(r->order(), 4u);
    EXPECT_TRUE(testsupport::isomorphic(r, make_truncated_poly(2, {2})));
    EXPECT_FALSE(testsupport::isomorphic(r, make_zn(4)));
}

TEST(TrivialExt, MultiplicationLaw) {
    auto z4 = make_zn(4);
    auto r = make_trivial_ext(z4, make_cyclic_module(z4, 2));
    const Elem a = *r->find("(2,1)"), b = *r->find("(3,1)");
    // (2,1)(3,1) = (6, 2·1 + 3·1) = (2, 1)
    EXPECT_EQ(r->name(r->mul(a, b)), "(2,1)");
}

TEST(TrivialExt, Z4OverZ2Nilradical) {
    auto z4 = make_zn(4);
    auto r = make_trivial_ext(z4, make_cyclic_module(z4, 2));
    EXPECT_EQ(r->order(), 8u);
    std::vector<std::string> nil;
    for (Elem e : r->nilpotents().elements()) nil.push_back(r->name(e));
    EXPECT_EQ(nil, (std::vector<std::string>{"(0,0)", "(2,0)", "(0,1)", "(2,1)"}));
}

TEST(TrivialExt, InvalidCyclicModuleRejected) {
    auto z4 = make_zn(4);
    try {
        make_cyclic_module(z4, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidModule);
    }
}

TEST(TrivialExt, QuotientModuleMatchesCyclic) {
    auto z4 = make_zn(4);
    auto via_quot = make_trivial_ext(z4, make_quotient_module(z4, principal(z4, 2).members(), "quot:2"));
    auto via_cyclic = make_trivial_ext(z4, make_cyclic_module(z4, 2));
    EXPECT_TRUE(testsupport::isomorphic(via_quot, via_cyclic));
}

// ---------------------------------------------------------------------------
// make_product
// ---------------------------------------------------------------------------

TEST(Product, Z2xZ2NilNotPrime) {
    auto r = make_product(make_zn(2), make_zn(2));
    const Elem e1 = *r->find("(1,0)"), e2 = *r->find("(0,1)");
    EXPECT_EQ(r->mul(e1, e2), r->zero());
    EXPECT_FALSE(is_prime(nilradical(r)).holds);
}

TEST(Product, Z2xZ3IsZ6) { EXPECT_TRUE(testsupport::isomorphic(make_product(make_zn(2), make_zn(3)), make_zn(6))); }

TEST(Product, Z4xZ2HasTwoMaximalIdeals) {
    auto r = make_product(make_zn(4), make_zn(2));
    EXPECT_EQ(r->order(), 8u);
    EXPECT_EQ(maximal_ideals(r).size(), 2u);
}

TEST(Product, CapIsEnforced) {
    try {
        make_product(make_zn(20), make_zn(20));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
}

// ---------------------------------------------------------------------------
// nilradical and companion scans
// ---------------------------------------------------------------------------

TEST(Nilradical, ZnMatchesPowerScanOracle) {
    for (int n = 2; n <= 40; ++n) EXPECT_EQ(make_zn(n)->nilpotents().elements(), nilpotent_residues(n)) << n;
}

TEST(Nilradical, Z8) { EXPECT_EQ(nilradical(make_zn(8)).members().elements(), (std::vector<Elem>{0, 2, 4, 6})); }

TEST(Nilradical, ExampleRingIsZeroConstantTerm) {
    auto r = make_truncated_poly(2, {2, 2});
    const auto nil = r->nilpotents();
    EXPECT_EQ(nil.count(), 8u);
    for (Elem e = 0; e < r->order(); ++e) EXPECT_EQ(nil.contains(e), (e & 1u) == 0) << r->name(e);
}

TEST(Nilradical, EqualsIntersectionOfPrimes) {
    for (const auto& r : small_corpus()) {
        ElementSet meet = ElementSet::full(r->order());
        for (const auto& p : prime_ideals(r)) meet &= p.members();
        EXPECT_EQ(meet, r->nilpotents()) << r->label();
        EXPECT_TRUE(is_ideal_set(*r, r->nilpotents())) << r->label();
    }
}

TEST(Scans, UnitsAndZerodivisorsPartitionFiniteRing) {
    for (const auto& r : small_corpus()) {
        EXPECT_TRUE((r->units() & r->zerodivisors()).empty()) << r->label();
        EXPECT_EQ((r->units() | r->zerodivisors()).count(), r->order()) << r->label();
    }
}

TEST(Scans, EveryConstructedRingSatisfiesAxioms) {
    for (const auto& r : small_corpus()) EXPECT_FALSE(r->axiom_failure().has_value()) << r->label();
}

// ---------------------------------------------------------------------------
// phi_image
// ---------------------------------------------------------------------------

TEST(PhiImage, Z8KernelIsZero) {
    auto r = make_zn(8);
    EXPECT_TRUE(phi_kernel(r).is_zero());
    auto img = phi_image(r);
    EXPECT_EQ(img.ring->order(), 8u);
    EXPECT_TRUE(testsupport::isomorphic(img.ring, r));
}

TEST(PhiImage, ExampleRingKernelIsZero) {
    auto r = make_truncated_poly(2, {2, 2});
    EXPECT_TRUE(phi_kernel(r).is_zero());
    EXPECT_TRUE(testsupport::isomorphic(phi_image(r).ring, r));
}

TEST(PhiImage, Z6RequiresPhiRing) {
    try {
        phi_image(make_zn(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PhiRingRequired);
    }
}

TEST(PhiImage, KernelTrivialOnEveryFinitePhiRing) {
    for (const auto& r : small_corpus()) {
        if (!nil_is_divided_prime(r).holds) continue;
        EXPECT_TRUE(phi_kernel(r).is_zero()) << r->label();
        // finite φ-ring: every non-nilpotent element is a unit
        EXPECT_EQ(r->units().complement(), r->nilpotents()) << r->label();
    }
}
