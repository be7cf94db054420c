#pragma once

#include <string>
#include <vector>

#include "philab/finring/construct.hpp"
#include "philab/finring/phi_image.hpp"
#include "philab/phiclass/report.hpp"
#include "philab/phiclass/sweeps.hpp"

namespace philab {

namespace detail {

using FiniteTable = IdealTable<FiniteIdeal, ElementSet>;

inline FiniteTable finite_table() {
    return FiniteTable([](const FiniteIdeal& i) { return i.members(); },
                       [](const FiniteIdeal& i) { return i.to_string(); });
}

inline bool divides(const FiniteRing& r, Elem a, Elem b) {
    for (Elem x = 0; x < r.order(); ++x)
        if (r.mul(a, x) == b) return true;
    return false;
}

/// Finite valuation-domain test: no zero divisors and divisibility is total.
inline Decision finite_valuation_domain(const FiniteRing& r) {
    for (Elem a = 0; a < r.order(); ++a) {
        if (a == r.zero()) continue;
        for (Elem b = 0; b < r.order(); ++b)
            if (b != r.zero() && r.mul(a, b) == r.zero())
                return {false, r.name(a) + "*" + r.name(b) + "=0 in " + r.label()};
    }
    for (Elem a = 0; a < r.order(); ++a)
        for (Elem b = a + 1; b < r.order(); ++b)
            if (!divides(r, a, b) && !divides(r, b, a))
                return {false, r.name(a) + " and " + r.name(b) + " do not divide each other in " + r.label()};
    return {true, ""};
}

/// Prüfer-domain test for a finite ring: a finite domain is a field, so this
/// is the domain test plus invertibility of every nonzero ideal.
inline Decision finite_prufer_domain(const RingPtr& r, std::size_t budget) {
    for (Elem a = 0; a < r->order(); ++a)
        for (Elem b = 0; b < r->order(); ++b)
            if (a != r->zero() && b != r->zero() && r->mul(a, b) == r->zero())
                return {false, r->name(a) + "*" + r->name(b) + "=0 in " + r->label()};
    for (const auto& i : enumerate_ideals(r, budget)) {
        if (i.is_zero()) continue;
        const auto inv = ideal_product(i, residual(unit_ideal(r), i));
        if (!inv.is_whole()) return {false, i.to_string() + " is not invertible in " + r->label()};
    }
    return {true, ""};
}

/// Every finitely generated regular ideal is invertible. T(R) = R for a
/// finite ring, so I^{-1} = (R : I) and the test is I·(R:I) = R.
inline Decision finite_classical_prufer(const RingPtr& r, std::size_t budget) {
    for (const auto& i : enumerate_ideals(r, budget)) {
        bool regular = false;
        for (Elem x : i.members().elements())
            if (!r->zerodivisors().contains(x)) {
                regular = true;
                break;
            }
        if (!regular) continue;
        const auto inv = ideal_product(i, residual(unit_ideal(r), i));
        if (!inv.is_whole()) return {false, "regular ideal " + i.to_string() + " is not invertible"};
    }
    return {true, ""};
}

/// Every 2-generated ideal of r is principal.
inline Decision finite_two_generated_principal(const RingPtr& r, const ElementSet* restrict_nonnil = nullptr) {
    std::vector<FiniteIdeal> principals;
    std::map<ElementSet, Elem> gen_of;
    for (Elem a = 0; a < r->order(); ++a) {
        auto p = principal(r, a);
        if (gen_of.emplace(p.members(), a).second) principals.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < principals.size(); ++i)
        for (std::size_t j = i + 1; j < principals.size(); ++j) {
            const auto s = ideal_sum(principals[i], principals[j]);
            if (restrict_nonnil && s.members().is_subset_of(*restrict_nonnil)) continue;
            if (!gen_of.count(s.members()))
                return {false, "(" + r->name(gen_of[principals[i].members()]) + ", " +
                                   r->name(gen_of[principals[j].members()]) + ") is not principal"};
        }
    return {true, ""};
}

inline Verdict from_decision(const Decision& d, const std::string& method, const std::string& citation = {}) {
    return d.holds ? Verdict::yes(method, citation) : Verdict::no(d.witness, method, citation);
}

inline std::vector<std::size_t> nonnil_ids(FiniteTable& t, const std::vector<FiniteIdeal>& all, const FiniteRing& r,
                                           std::vector<std::size_t>* every = nullptr) {
    std::vector<std::size_t> nn;
    for (const auto& i : all) {
        const auto id = t.intern(i);
        if (every) every->push_back(id);
        if (!i.members().is_subset_of(r.nilpotents())) nn.push_back(id);
    }
    return nn;
}

}  // namespace detail

/// φ-Prüfer characterizations on a finite φ-ring, each decided exhaustively
/// (the polynomial routes up to the degree bound).
inline std::map<std::string, Verdict> finite_phi_prufer_routes(const RingPtr& r, const ClassifyOptions& opt,
                                                               std::vector<std::string>* notes = nullptr) {
    using namespace detail;
    if (auto phi = nil_is_divided_prime(r, opt.ideal_budget); !phi.holds)
        throw Error(ErrorCode::PhiRingRequired, r->label() + " is not a φ-ring (" + phi.witness + ")");
    const std::size_t budget = opt.ideal_budget;
    std::map<std::string, Verdict> routes;

    routes["r2"] = guarded([&] {
        const auto img = phi_image(r, budget);
        return from_decision(finite_classical_prufer(img.ring, budget), "exhaustive", "φ(R) is a Prüfer ring");
    });
    routes["r3"] = guarded([&] {
        const auto q = make_quotient(r, r->nilpotents(), "red");
        return from_decision(finite_prufer_domain(q.ring, budget), "by-quotient-theorem",
                             "R/Nil(R) is a Prüfer domain");
    });
    routes["r4"] = guarded([&] {
        const auto img = phi_image(r, budget);
        const auto q = make_quotient(img.ring, img.ring->nilpotents(), "red");
        return from_decision(finite_prufer_domain(q.ring, budget), "by-quotient-theorem",
                             "φ(R)/Nil(φ(R)) is a Prüfer domain");
    });
    auto local_valuation = [&](const std::vector<FiniteIdeal>& ps, const char* cite) {
        return guarded([&] {
            for (const auto& p : ps) {
                const auto loc = localize_at(p);
                const auto q = make_quotient(loc.ring, loc.ring->nilpotents(), "red");
                if (auto d = finite_valuation_domain(*q.ring); !d.holds)
                    return Verdict::no("at " + p.to_string() + ": " + d.witness, "exhaustive", cite);
            }
            return Verdict::yes("exhaustive", cite);
        });
    };
    routes["r5"] = local_valuation(prime_ideals(r, budget), "R_P/Nil(R_P) is a valuation domain for every prime P");
    routes["r6"] = local_valuation(maximal_ideals(r, budget), "R_M/Nil(R_M) is a valuation domain for every maximal M");

    auto table = finite_table();
    std::vector<std::size_t> every;
    const auto all = enumerate_ideals(r, budget);
    const auto nn = nonnil_ids(table, all, *r, &every);
    if (nn.size() == 1 && notes) notes->push_back("nonnil ideal lattice is {R}; lattice routes hold trivially");
    SweepSpec spec{"exhaustive", false, opt.weaken_distributivity};
    routes["r7"] = guarded([&] { return sweep_distributive(table, nn, spec); });
    routes["r8"] = guarded([&] { return sweep_factorization(table, nn, spec); });
    routes["r9"] = guarded([&] { return sweep_residual_sum(table, nn, every, spec); });
    routes["r10"] = guarded([&] { return sweep_residual_intersection(table, nn, every, spec); });
    routes["r11"] = guarded([&] { return sweep_product_identity(table, nn, spec); });
    routes["r12"] = guarded([&] {
        const char* cite = "finitely generated nonnil ideals are locally principal";
        for (const auto& m : maximal_ideals(r, budget)) {
            const auto loc = localize_at(m);
            for (std::size_t id : nn) {
                std::vector<Elem> image;
                for (Elem x : table.at(id).members().elements()) image.push_back(loc.projection[x]);
                const auto im = span(loc.ring, image);
                bool principal_image = false;
                for (Elem g : im.members().elements())
                    if (principal(loc.ring, g) == im) {
                        principal_image = true;
                        break;
                    }
                if (!principal_image)
                    return Verdict::no(table.name(id) + " is not principal at " + m.to_string(), "exhaustive", cite);
            }
        }
        return Verdict::yes("exhaustive", cite);
    });
    const auto gopt = opt.gaussian();
    auto poly_route = [&](const GaussianVerdict& g, const char* cite) {
        if (!g.holds)
            return Verdict::no("f=" + g.witness->f.to_string() + ", g=" + g.witness->g.to_string() + ": c(fg)=" +
                                   g.witness->c_fg.to_string() + " but c(f)c(g)=" + g.witness->cf_cg.to_string(),
                               g.method, cite);
        return Verdict::up_to_bound(g.method, cite);
    };
    routes["r13"] = guarded([&] { return poly_route(nonnil_polys_gaussian(r, gopt), "every non-nilpotent f is Gaussian"); });
    routes["r14"] = guarded([&] {
        return poly_route(ring_gaussian_checks(r, gopt).gaussian_nonnil_f, "c(fg)=c(f)c(g) for non-nilpotent f, g");
    });
    return routes;
}

inline ClassificationReport classify_finite(const RingPtr& r, const ClassifyOptions& opt = {}) {
    using namespace detail;
    ClassificationReport rep;
    rep.ring = r->label();
    rep.family = "finite";
    auto& p = rep.properties;
    const std::size_t budget = opt.ideal_budget;
    rep.notes.push_back("finite ring: every element is a unit or a zero divisor, so T(R) = R");

    p["phi_ring"] = guarded([&] {
        return from_decision(nil_is_divided_prime(r, budget), "exhaustive", "Nil(R) is a divided prime ideal");
    });
    const bool is_phi = p["phi_ring"].value == Truth::True;
    const bool phi_unknown = p["phi_ring"].value == Truth::Inconclusive;
    const std::string not_phi = (phi_unknown ? "φ-ring test undecided: " : "not a φ-ring: ") + p["phi_ring"].witness;

    if (is_phi) {
        p["strongly_phi"] = [&] {
            for (Elem z : r->zerodivisors().elements())
                if (!r->is_nilpotent(z)) return Verdict::no(r->name(z) + " is a zero divisor but not nilpotent", "exhaustive");
            return Verdict::yes("exhaustive", "Z(R) = Nil(R)");
        }();
        p["phi_chained"] = [&] {
            for (Elem a = 0; a < r->order(); ++a)
                for (Elem b = a + 1; b < r->order(); ++b)
                    if (!r->is_nilpotent(a) && !r->is_nilpotent(b) && !divides(*r, a, b) && !divides(*r, b, a))
                        return Verdict::no(r->name(a) + " and " + r->name(b) + " do not divide each other", "exhaustive");
            return Verdict::yes("exhaustive", "a | b or b | a for non-nilpotent a, b");
        }();
        p["phi_vnr"] = guarded([&] {
            const auto ms = maximal_ideals(r, budget);
            const auto nil = nilradical(r);
            for (const auto& m : ms)
                if (!(m == nil)) return Verdict::no("maximal ideal " + m.to_string() + " differs from Nil(R)", "exhaustive");
            return Verdict::yes("exhaustive", "(R, Nil(R)) is local");
        });
        rep.routes = finite_phi_prufer_routes(r, opt, &rep.notes);
        p["phi_prufer"] = route_consensus(rep.routes, rep.ring);
        p["phi_bezout"] = guarded([&] {
            const auto q = make_quotient(r, r->nilpotents(), "red");
            return from_decision(finite_two_generated_principal(q.ring), "exhaustive",
                                 "R/Nil(R) is a Bézout domain");
        });
    } else {
        for (const char* k : {"strongly_phi", "phi_chained", "phi_vnr", "phi_prufer", "phi_bezout"})
            p[k] = phi_unknown ? Verdict::unknown(not_phi, "requires φ-ring") : Verdict::no(not_phi, "requires φ-ring");
        rep.notes.push_back("φ-Prüfer routes not run: " + not_phi);
    }

    const auto g = [&] {
        try {
            return std::optional<RingGaussian>(ring_gaussian_checks(r, opt.gaussian()));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InternalInconsistency) throw;
            return std::optional<RingGaussian>();
        }
    }();
    auto gaussian_verdict = [&](const GaussianVerdict& v, const char* cite) {
        if (!v.holds)
            return Verdict::no("f=" + v.witness->f.to_string() + ", g=" + v.witness->g.to_string() + ", fg=" +
                                   v.witness->fg.to_string() + ", c(f)c(g)=" + v.witness->cf_cg.to_string(),
                               v.method, cite);
        return Verdict::up_to_bound(v.method, cite);
    };
    if (g) {
        p["gaussian_all_f"] = gaussian_verdict(g->gaussian_all_f, "c(fg)=c(f)c(g) for all f, g");
        p["gaussian_nonnil_f"] = gaussian_verdict(g->gaussian_nonnil_f, "c(fg)=c(f)c(g) for non-nilpotent f, g");
    } else {
        p["gaussian_all_f"] = Verdict::unknown("polynomial space exceeds the budget");
        p["gaussian_nonnil_f"] = Verdict::unknown("polynomial space exceeds the budget");
    }

    p["arithmetical"] = guarded([&] {
        auto table = finite_table();
        std::vector<std::size_t> ids;
        for (const auto& i : enumerate_ideals(r, budget)) ids.push_back(table.intern(i));
        auto v = sweep_distributive(table, ids, SweepSpec{"exhaustive", false, false});
        v.citation = "lattice of all ideals is distributive";
        return v;
    });
    p["classical_prufer"] = guarded([&] {
        return from_decision(finite_classical_prufer(r, budget), "exhaustive regular-ideal scan",
                             "finitely generated regular ideals are invertible (T(R) = R)");
    });

    // homological classes by equivalence, never by resolutions
    if (is_phi) {
        auto vnr = p["phi_vnr"];
        vnr.method = "derived(phi_vnr)";
        vnr.citation = "φ-w.gl.dim(R) = 0 ⟺ R is φ-von Neumann regular";
        p["phi_wgldim_0"] = vnr;
        p["phi_wgldim_le_1"] = [&] {
            const auto& a = p["phi_prufer"];
            const auto& b = p["strongly_phi"];
            Verdict v;
            if (a.value == Truth::False) v = Verdict::no("not φ-Prüfer: " + a.witness, "derived(phi_prufer, strongly_phi)");
            else if (b.value == Truth::False) v = Verdict::no("not strongly φ: " + b.witness, "derived(phi_prufer, strongly_phi)");
            else if (a.value == Truth::True && b.value == Truth::True) {
                v = Verdict::yes("derived(phi_prufer, strongly_phi)");
                v.bounded = a.bounded || b.bounded;
            } else v = Verdict::unknown("φ-Prüfer or strongly φ undecided", "derived(phi_prufer, strongly_phi)");
            v.citation = "φ-w.gl.dim(R) ≤ 1 ⟺ φ-Prüfer strongly φ-ring ⟺ nonnil-semihereditary";
            return v;
        }();
    } else {
        p["phi_wgldim_0"] = Verdict::unknown("defined for φ-rings only", "requires φ-ring");
        p["phi_wgldim_le_1"] = Verdict::unknown("defined for φ-rings only", "requires φ-ring");
    }
    return rep;
}

}  // namespace philab
