#pragma once

#include <string>
#include <vector>

#include "philab/dividedext/nonnil.hpp"
#include "philab/phiclass/report.hpp"
#include "philab/phiclass/sweeps.hpp"

namespace philab {

namespace detail {

using DomTable = IdealTable<DomIdeal, DomIdeal>;

inline DomTable dom_table() {
    return DomTable([](const DomIdeal& i) { return i; }, [](const DomIdeal& i) { return i.to_string() + "⋉M"; });
}

/// Size bound used to enumerate base ideals J of the nonnil ideals J⋉M.
inline Int sweep_bound(const Domain& D, const ClassifyOptions& opt) {
    switch (D.kind()) {
        case DomainKind::Int: return opt.generator_bound;
        case DomainKind::IntLoc: return opt.exponent_bound;
        case DomainKind::Quad: return opt.norm_bound;
    }
    return opt.generator_bound;
}

inline std::string bound_method(const Domain& D, const ClassifyOptions& opt) {
    const auto b = std::to_string(sweep_bound(D, opt));
    switch (D.kind()) {
        case DomainKind::Int: return "bounded(generator<=" + b + ")";
        case DomainKind::IntLoc: return "bounded(exponent<=" + b + ")";
        case DomainKind::Quad: return "bounded(norm<=" + b + ")";
    }
    return "bounded";
}

inline Verdict from_finding(const Finding& f, const std::string& citation = {}) {
    return f.holds ? Verdict::yes(f.method, citation) : Verdict::no(f.witness, f.method, citation);
}

}  // namespace detail

inline Verdict divided_is_phi_ring(const DividedExtRing& R, const ClassifyOptions& opt = {}) {
    const char* cite = "Nil(R) is a divided prime ideal";
    const auto d = divided_check(R, opt.divided_samples, opt.seed);
    if (!d.holds) return Verdict::no("Nil(R) = 0⋉M is not divided: " + d.witness, d.method, cite);
    // R/(0⋉M) ≅ D is a domain, so Nil(R) is prime; divisibility of K/D
    // makes it divided, and the sampled check confirms the arithmetic.
    return Verdict::yes("structural+" + d.method, cite);
}

/// φ-Prüfer routes for D⋉K/D. Lattice routes sweep nonnil ideals J⋉M with J
/// from the bounded enumeration of D-ideals.
inline std::map<std::string, Verdict> divided_phi_prufer_routes(const DividedExtRing& R, const ClassifyOptions& opt) {
    using namespace detail;
    if (auto phi = divided_is_phi_ring(R, opt); phi.value != Truth::True)
        throw Error(ErrorCode::PhiRingRequired, R.label() + " is not a φ-ring (" + phi.witness + ")");
    const auto& D = R.base();
    std::map<std::string, Verdict> routes;

    routes["r3"] = guarded([&] { return from_finding(is_prufer_domain(D, opt.norm_bound), "R/Nil(R) ≅ D is a Prüfer domain"); });
    for (const char* k : {"r2", "r4"}) {
        auto v = routes["r3"];
        v.method = "derived-equivalent(r3)";
        v.citation = std::string(k) == "r2" ? "φ(R) is a Prüfer ring" : "φ(R)/Nil(φ(R)) is a Prüfer domain";
        routes[k] = v;
    }
    routes["r5"] = Verdict::unknown("localization is run for finite rings only");
    routes["r6"] = Verdict::unknown("localization is run for finite rings only");

    auto table = dom_table();
    std::vector<std::size_t> nn;
    for (const auto& J : enumerate_dom_ideals(D, sweep_bound(D, opt))) nn.push_back(table.intern(J));
    const SweepSpec spec{bound_method(D, opt), true, opt.weaken_distributivity};
    routes["r7"] = guarded([&] { return sweep_distributive(table, nn, spec); });
    routes["r8"] = guarded([&] { return sweep_factorization(table, nn, spec); });
    routes["r9"] = guarded([&] { return sweep_residual_sum(table, nn, nn, spec); });
    routes["r10"] = guarded([&] { return sweep_residual_intersection(table, nn, nn, spec); });
    routes["r11"] = guarded([&] { return sweep_product_identity(table, nn, spec); });

    const char* cite12 = "finitely generated nonnil ideals are locally principal";
    if (D.kind() == DomainKind::Quad)
        routes["r12"] = Verdict::unknown("local principality is not decided for quadratic orders; r3 governs");
    else
        routes["r12"] = Verdict::yes("valuation exponents: D is a principal ideal domain", cite12);
    routes["r13"] = Verdict::unknown("polynomial routes are run for finite rings only");
    routes["r14"] = Verdict::unknown("polynomial routes are run for finite rings only");
    return routes;
}

inline ClassificationReport classify_divided(const DividedExtRing& R, const ClassifyOptions& opt = {}) {
    using namespace detail;
    ClassificationReport rep;
    rep.ring = R.label();
    rep.family = "divided";
    auto& p = rep.properties;
    const auto& D = R.base();

    p["phi_ring"] = guarded([&] { return divided_is_phi_ring(R, opt); });
    const bool is_phi = p["phi_ring"].value == Truth::True;

    p["phi_vnr"] = Verdict::no("R/Nil(R) ≅ " + D.label() + " is not a field: " +
                                   std::to_string(R.small_nonunit_int()) + " is not a unit",
                               "structural", "(R, Nil(R)) is local");
    if (is_phi) {
        p["strongly_phi"] = [&] {
            const Int c = R.small_nonunit_int();
            const auto x = R.make(FieldElem(c), {});
            const auto y = R.make({}, FieldElem(Rational(1, c)));
            if (!(R.mul(x, y) == R.zero()))
                throw Error(ErrorCode::InternalInconsistency, "(c,0)·(0,1/c) is nonzero in " + R.label());
            return Verdict::no(R.to_string(x) + "·" + R.to_string(y) + " = 0 with " + R.to_string(x) + " not nilpotent",
                               "structural", "Z(R) = Nil(R)");
        }();
        p["phi_chained"] = guarded([&] { return from_finding(is_valuation_domain(D), "a | b or b | a for non-nilpotent a, b"); });
        rep.routes = divided_phi_prufer_routes(R, opt);
        p["phi_prufer"] = route_consensus(rep.routes, rep.ring);
        p["phi_bezout"] = guarded([&] { return from_finding(traits(D).is_bezout, "R/Nil(R) is a Bézout domain"); });
    } else {
        const std::string not_phi = "not a φ-ring: " + p["phi_ring"].witness;
        for (const char* k : {"strongly_phi", "phi_chained", "phi_prufer", "phi_bezout"})
            p[k] = Verdict::no(not_phi, "requires φ-ring");
        rep.notes.push_back("φ-Prüfer routes not run: " + not_phi);
    }

    p["gaussian_all_f"] = Verdict::unknown("Gaussian tests run over finite rings only");
    p["gaussian_nonnil_f"] = Verdict::unknown("Gaussian tests run over finite rings only");
    p["arithmetical"] = Verdict::unknown("ideal lattice distributivity is tested on finite rings only");
    if (R.divisible()) {
        p["classical_prufer"] = Verdict::yes("structural: every non-unit is a zero divisor, so T(R) = R",
                                             "finitely generated regular ideals are invertible");
        rep.notes.push_back("every non-unit of D⋉K/D is a zero divisor, so T(R) = R");
    } else {
        p["classical_prufer"] = Verdict::unknown("regular ideals of D⋉D are not enumerated");
    }

    if (is_phi) {
        auto vnr = p["phi_vnr"];
        vnr.method = "derived(phi_vnr)";
        vnr.citation = "φ-w.gl.dim(R) = 0 ⟺ R is φ-von Neumann regular";
        p["phi_wgldim_0"] = vnr;
        p["phi_wgldim_le_1"] = Verdict::no("not strongly φ: " + p["strongly_phi"].witness, "derived(phi_prufer, strongly_phi)",
                                           "φ-w.gl.dim(R) ≤ 1 ⟺ φ-Prüfer strongly φ-ring ⟺ nonnil-semihereditary");
    } else {
        p["phi_wgldim_0"] = Verdict::unknown("defined for φ-rings only", "requires φ-ring");
        p["phi_wgldim_le_1"] = Verdict::unknown("defined for φ-rings only", "requires φ-ring");
    }
    return rep;
}

}  // namespace philab
