#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "philab/core/workers.hpp"
#include "philab/phiclass/theorems.hpp"
#include "philab/theoremlab/corpus.hpp"

namespace philab {

enum class Status { Pass, Fail, Inconclusive, Skip };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
        case Status::Skip: return "skip";
    }
    return "inconclusive";
}

inline const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"t1", "t2", "t3", "t4", "t5", "cor0", "t11", "pi", "examples", "diagram"};
    return ids;
}

inline const std::map<std::string, std::string>& suite_citations() {
    static const std::map<std::string, std::string> c = {
        {"t1", "φ-Prüfer ⟺ the lattice of nonnil ideals is distributive"},
        {"t2", "φ-Prüfer ⟺ I ⊆ J (J f.g. nonnil) implies I = JK for a nonnil K"},
        {"t3", "φ-Prüfer ⟺ (I+J):K = I:K + J:K ⟺ K:(I∩J) = K:I + K:J"},
        {"t4", "φ-Prüfer ⟺ (I∩J)K = IK ∩ JK for nonnil I, J, K"},
        {"t5", "φ-Prüfer ⟺ f.g. nonnil ideals are locally principal ⟺ c(fg) = c(f)c(g) for non-nilpotent f"},
        {"cor0", "the characterizations of φ-Prüfer rings are equivalent"},
        {"t11", "a semilocal φ-Prüfer ring is φ-Bézout"},
        {"pi", "in a φ-Prüfer ring whose nonnil primes are maximal, primary nonnil ideals are exactly the irreducible ones"},
        {"examples", "F2[x,y]/(x²,y²) is φ-von Neumann regular but not Gaussian; Z(2)⋉Q/Z(2) has Ann(x) = yR and Ann(y) = xR"},
        {"diagram", "arithmetical ⇒ Gaussian ⇒ φ-Prüfer ⇒ Prüfer, φ-w.gl.dim ≤ 1 ⇒ φ-Prüfer, all equivalent for strongly φ-rings"},
    };
    return c;
}

struct SuiteEntry {
    std::string ring;
    std::string check;
    Status status = Status::Skip;
    std::string detail;
};

struct SuiteResult {
    std::string id;
    std::vector<SuiteEntry> entries;

    std::size_t count(Status s) const {
        return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [s](const auto& e) { return e.status == s; }));
    }
    /// fail on any definite violation; pass needs at least one passing entry
    /// and nothing inconclusive.
    Status status() const {
        if (count(Status::Fail)) return Status::Fail;
        if (count(Status::Inconclusive) || !count(Status::Pass)) return Status::Inconclusive;
        return Status::Pass;
    }
};

struct LabOptions {
    ClassifyOptions classify;
    std::vector<std::string> suites = suite_ids();
    Int pi_bound = 200;
    std::size_t annihilator_samples = 1000;
    unsigned workers = 0;  // 0: PHILAB_WORKERS or hardware concurrency
};

struct RingResult {
    std::string spec;
    std::string label;
    bool finite = false;
    std::optional<ClassificationReport> report;
    std::optional<ErrorCode> error_code;
    std::string error;
};

struct LabReport {
    LabOptions options;
    std::vector<RingResult> rings;
    std::vector<SuiteResult> suites;

    int exit_code() const {
        bool inconclusive = false;
        for (const auto& s : suites) {
            if (s.status() == Status::Fail) return 1;
            inconclusive = inconclusive || s.status() == Status::Inconclusive;
        }
        return inconclusive ? 2 : 0;
    }
    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(suites.begin(), suites.end(), [](const auto& s) { return s.status() == Status::Pass; }));
    }
};

inline void validate_suites(const std::vector<std::string>& ids) {
    for (const auto& id : ids)
        if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end())
            throw Error(ErrorCode::ParseError, "unknown suite '" + id + "'");
}

namespace detail {

inline std::string verdict_text(const std::string& name, const Verdict& v) {
    std::string s = name + "=" + to_string(v.value);
    if (v.value == Truth::True && v.bounded) s += "(bounded)";
    return s;
}

/// Two verdicts on the same statement. Disagreement is a violation only when
/// both are definite; a bounded true against a definite false is undecided.
inline SuiteEntry agreement(const std::string& ring, const std::string& check, const std::string& an, const Verdict& a,
                            const std::string& bn, const Verdict& b) {
    SuiteEntry e{ring, check, Status::Pass, verdict_text(an, a) + ", " + verdict_text(bn, b)};
    if (a.value == Truth::Inconclusive || b.value == Truth::Inconclusive) e.status = Status::Inconclusive;
    else if (a.value != b.value) e.status = a.definite() && b.definite() ? Status::Fail : Status::Inconclusive;
    for (const auto* v : {&a, &b})
        if (v->value == Truth::False && !v->witness.empty()) e.detail += "; " + v->witness;
    return e;
}

inline Status worst(Status a, Status b) {
    auto rank = [](Status s) { return s == Status::Fail ? 3 : s == Status::Inconclusive ? 2 : s == Status::Pass ? 1 : 0; };
    return rank(a) >= rank(b) ? a : b;
}

inline bool is_phi(const RingResult& r) {
    return r.report && r.report->property("phi_ring").value == Truth::True;
}

/// Entry for a ring whose classification did not complete.
inline std::optional<SuiteEntry> missing_report(const RingResult& r, const std::string& check) {
    if (r.report) return std::nullopt;
    const bool bug = r.error_code == ErrorCode::InternalInconsistency;
    return SuiteEntry{r.spec, check, bug ? Status::Fail : Status::Inconclusive, "classification failed: " + r.error};
}

inline SuiteEntry route_suite_entry(const RingResult& r, const std::string& check, const std::vector<std::string>& routes) {
    if (auto m = missing_report(r, check)) return *m;
    if (!is_phi(r)) return {r.spec, check, Status::Skip, "not a φ-ring"};
    const auto& rep = *r.report;
    SuiteEntry out{r.spec, check, Status::Skip, {}};
    for (const auto& route : routes) {
        const auto e = agreement(r.spec, check, route, rep.routes.at(route), "r3", rep.routes.at("r3"));
        out.status = out.status == Status::Skip ? e.status : worst(out.status, e.status);
        out.detail += (out.detail.empty() ? "" : " | ") + e.detail;
    }
    return out;
}

template <class Ideal, class Enum>
SuiteEntry factorization_entry(const RingResult& r, const Enum& ideals, const std::function<bool(const Ideal&)>& nonnil,
                               const std::function<FactorizationResult(const Ideal&, const Ideal&)>& check) {
    const auto& prufer = r.report->property("phi_prufer");
    std::size_t pairs = 0;
    std::string first_failure;
    for (const auto& i : ideals)
        for (const auto& j : ideals) {
            if (!nonnil(i) || !nonnil(j) || !i.is_subset_of(j)) continue;
            ++pairs;
            const auto res = check(i, j);
            if (!res.exists && first_failure.empty())
                first_failure = "I=" + i.to_string() + ", J=" + j.to_string() + ": " + res.witness;
        }
    SuiteEntry e{r.spec, "factorization", Status::Pass, std::to_string(pairs) + " pairs I ⊆ J; " + verdict_text("phi_prufer", prufer)};
    if (prufer.value == Truth::True) {
        if (!first_failure.empty()) e.status = prufer.definite() ? Status::Fail : Status::Inconclusive;
    } else if (prufer.value == Truth::False) {
        if (first_failure.empty()) e.status = Status::Inconclusive;
    } else {
        e.status = Status::Inconclusive;
    }
    if (!first_failure.empty()) e.detail += "; no K for " + first_failure;
    return e;
}

inline SuiteEntry t2_entry(const RingResult& r, const AnyRing& ring, const LabOptions& opt) {
    if (auto m = missing_report(r, "factorization")) return *m;
    if (!is_phi(r)) return {r.spec, "factorization", Status::Skip, "not a φ-ring"};
    if (const auto* f = std::get_if<RingPtr>(&ring)) {
        const auto ideals = enumerate_ideals(*f, opt.classify.ideal_budget);
        const auto& nil = (*f)->nilpotents();
        return factorization_entry<FiniteIdeal>(
            r, ideals, [&](const FiniteIdeal& i) { return !i.members().is_subset_of(nil); },
            [](const FiniteIdeal& i, const FiniteIdeal& j) { return check_t2_factorization(i, j); });
    }
    const auto& R = std::get<DividedExtRing>(ring);
    return factorization_entry<NonnilIdeal>(
        r, enumerate_nonnil(R, sweep_bound(R.base(), opt.classify)), [](const NonnilIdeal&) { return true; },
        [](const NonnilIdeal& i, const NonnilIdeal& j) { return check_t2_factorization(i, j); });
}

inline SuiteEntry cor0_entry(const RingResult& r) {
    if (auto m = missing_report(r, "route-consensus")) return *m;
    if (!is_phi(r)) return {r.spec, "route-consensus", Status::Skip, "not a φ-ring"};
    std::size_t definite = 0, bounded = 0, undecided = 0;
    for (const auto& [name, v] : r.report->routes) {
        if (v.definite()) ++definite;
        else if (v.value == Truth::True) ++bounded;
        else ++undecided;
    }
    const auto& c = r.report->property("phi_prufer");
    SuiteEntry e{r.spec, "route-consensus", Status::Pass,
                 std::to_string(definite) + " definite, " + std::to_string(bounded) + " bounded, " + std::to_string(undecided) +
                     " undecided routes; consensus " + to_string(c.value)};
    if (definite < 1) e.status = Status::Inconclusive;
    return e;
}

inline SuiteEntry t5_entry(const RingResult& r) {
    if (!r.finite) return {r.spec, "content-formula", Status::Skip, "polynomial checks run on finite rings only"};
    return route_suite_entry(r, "content-formula", {"r12", "r13", "r14"});
}

inline SuiteEntry t11_entry(const RingResult& r, const AnyRing& ring, const LabOptions& opt) {
    if (auto m = missing_report(r, "semilocal-bezout")) return *m;
    if (!is_phi(r)) return {r.spec, "semilocal-bezout", Status::Skip, "not a φ-ring"};
    const auto rep = check_t11_bezout(ring, opt.classify);
    SuiteEntry e{r.spec, "semilocal-bezout", Status::Pass,
                 verdict_text("semilocal", rep.semilocal) + ", " + verdict_text("phi_prufer", rep.phi_prufer) + ", " +
                     verdict_text("phi_bezout", rep.phi_bezout) + "; " + std::to_string(rep.checked) + " ideals checked; " + rep.note};
    if (!rep.applicable) e.status = Status::Skip;
    else if (rep.phi_bezout.value == Truth::False) e.status = Status::Fail;
    else if (rep.phi_bezout.value == Truth::Inconclusive) e.status = Status::Inconclusive;
    if (rep.phi_bezout.value == Truth::False) e.detail += "; " + rep.phi_bezout.witness;
    return e;
}

inline bool prime_power(Int n) {
    Int p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

inline SuiteEntry pi_entry(const RingResult& r, const AnyRing& ring, const LabOptions& opt) {
    const std::string check = "primary-irreducible";
    if (auto m = missing_report(r, check)) return *m;
    if (!is_phi(r)) return {r.spec, check, Status::Skip, "not a φ-ring"};
    if (const auto* d = std::get_if<DividedExtRing>(&ring); d && d->base().kind() != DomainKind::Int)
        return {r.spec, check, Status::Skip, "run on Z⋉Q/Z only"};
    const auto rep = check_primary_irreducible(ring, opt.pi_bound);
    if (rep.vacuous) return {r.spec, check, Status::Skip, "vacuous: " + rep.note};
    SuiteEntry e{r.spec, check, Status::Pass, {}};
    std::size_t mismatches = 0;
    std::string first;
    for (const auto& row : rep.rows)
        if (row.primary != prime_power(row.n) || row.irreducible != prime_power(row.n))
            if (mismatches++ == 0) first = "n=" + std::to_string(row.n);
    if (!rep.hypothesis || !rep.biconditional || mismatches) e.status = Status::Fail;
    e.detail = "n=2.." + std::to_string(opt.pi_bound) + ": primary ⟺ irreducible ⟺ prime power" +
               (mismatches ? " fails at " + first : "") + (rep.hypothesis ? "; nonnil primes maximal" : "; hypothesis fails");
    for (const auto& row : rep.rows)
        if (row.n == 8 || row.n == 12)
            e.detail += "; n=" + std::to_string(row.n) + ": primary=" + (row.primary ? "true" : "false") + " irreducible=" +
                        (row.irreducible ? "true" : "false") +
                        (row.primary_witness.empty() ? "" : " (" + row.primary_witness + ")") +
                        (row.irreducible_witness.empty() ? "" : " (" + row.irreducible_witness + ")");
    return e;
}

inline std::vector<SuiteEntry> example_entries(const LabOptions& opt) {
    std::vector<SuiteEntry> out;
    const std::string ex1 = "trunc:2:2,2";
    const auto R = make_truncated_poly(2, {2, 2});
    auto copt = opt.classify;
    copt.deg_bound = 1;
    const auto rep = classify_finite(R, copt);
    auto expect = [&](const std::string& prop, Truth want) {
        const auto& v = rep.property(prop);
        SuiteEntry e{ex1, prop, v.value == want ? Status::Pass : Status::Fail, verdict_text(prop, v)};
        if (v.value == Truth::Inconclusive) e.status = Status::Inconclusive;
        if (!v.witness.empty()) e.detail += "; " + v.witness;
        out.push_back(e);
    };
    expect("phi_ring", Truth::True);
    expect("phi_vnr", Truth::True);
    expect("phi_prufer", Truth::True);
    expect("arithmetical", Truth::False);
    {
        bool all_routes = rep.routes.size() == 13;
        for (const auto& [k, v] : rep.routes) all_routes = all_routes && v.value == Truth::True;
        out.push_back({ex1, "phi_prufer_routes", all_routes ? Status::Pass : Status::Fail, std::to_string(rep.routes.size()) + " routes"});
    }
    {
        auto g = opt.classify.gaussian();
        g.deg_bound = 1;
        const auto all = ring_gaussian_checks(R, g).gaussian_all_f;
        SuiteEntry e{ex1, "gaussian_all_f(deg<=1)", Status::Fail, all.method};
        if (!all.holds && all.witness) {
            const auto& w = *all.witness;
            const bool exact = w.f.to_string() == "xZ+y" && w.g.to_string() == "xZ+y" && w.fg.is_zero() &&
                               w.cf_cg == principal(R, *R->find("x*y")) && !w.cf_cg.is_zero();
            e.status = exact ? Status::Pass : Status::Fail;
            e.detail = "f=" + w.f.to_string() + ", g=" + w.g.to_string() + ", fg=" + w.fg.to_string() + ", c(fg)=" +
                       w.c_fg.to_string() + ", c(f)c(g)=" + w.cf_cg.to_string() + " [" + all.method + "]";
        }
        out.push_back(e);
        g.deg_bound = 2;
        const auto nn = ring_gaussian_checks(R, g).gaussian_nonnil_f;
        const bool ok = nn.holds && nn.sampled && nn.pairs >= 10'000;
        out.push_back({ex1, "gaussian_nonnil_f(deg<=2)", ok ? Status::Pass : Status::Fail,
                       std::string(nn.holds ? "holds" : "fails") + " on " + std::to_string(nn.pairs) + " pairs [" + nn.method + "]"});
    }
    {
        const DividedExtRing Z2(Domain::localized(2), ModuleTag::FractionsModD);
        const auto x = Z2.make(FieldElem(2), {});
        const auto y = Z2.make({}, FieldElem(Rational(1, 2)));
        const auto a = annihilator_membership(Z2, x, y, opt.annihilator_samples, opt.classify.seed);
        out.push_back({Z2.label(), "annihilators", a.holds() ? Status::Pass : Status::Fail,
                       "y ∈ Ann(x): " + std::string(a.y_in_ann_x ? "yes" : "no") + ", x ∈ Ann(y): " + (a.x_in_ann_y ? "yes" : "no") +
                           ", " + std::to_string(a.samples_ann_x) + "+" + std::to_string(a.samples_ann_y) + " sampled annihilators, " +
                           std::to_string(a.failures) + " outside the principal ideal" + (a.witness.empty() ? "" : "; " + a.witness)});
    }
    return out;
}

struct Edge {
    const char* from;
    const char* to;
};

inline SuiteEntry diagram_entry(const RingResult& r) {
    if (auto m = missing_report(r, "implications")) return *m;
    const auto& p = r.report->properties;
    std::vector<Edge> edges = {{"arithmetical", "gaussian_all_f"}, {"gaussian_all_f", "classical_prufer"}};
    if (is_phi(r)) {
        for (Edge e : {Edge{"gaussian_all_f", "phi_prufer"}, Edge{"phi_prufer", "classical_prufer"},
                       Edge{"phi_wgldim_le_1", "phi_prufer"}})
            edges.push_back(e);
        if (p.at("strongly_phi").value == Truth::True)
            for (Edge e : {Edge{"classical_prufer", "phi_prufer"}, Edge{"phi_prufer", "phi_wgldim_le_1"}})
                edges.push_back(e);
    }
    std::size_t checked = 0, skipped = 0;
    SuiteEntry out{r.spec, "implications", Status::Pass, {}};
    for (const auto& e : edges) {
        const auto& a = p.at(e.from);
        const auto& b = p.at(e.to);
        if (a.value != Truth::True) continue;
        if (b.value == Truth::Inconclusive) {
            ++skipped;
            continue;
        }
        ++checked;
        if (b.value == Truth::False) {
            out.status = Status::Fail;
            out.detail += std::string(out.detail.empty() ? "" : "; ") + e.from + " ⇒ " + e.to + " violated: " + b.witness;
        }
    }
    if (checked == 0) out.status = Status::Skip;
    const std::string counts = std::to_string(checked) + " edges checked, " + std::to_string(skipped) + " undecided";
    out.detail = out.detail.empty() ? counts : counts + "; " + out.detail;
    if (p.at("classical_prufer").value == Truth::True && p.at("phi_ring").value == Truth::False)
        out.detail += "; Prüfer ⇏ φ-ring datapoint (" + p.at("phi_ring").witness + ")";
    return out;
}

}  // namespace detail

/// Classifies every corpus ring (in parallel), then runs the selected suites.
inline LabReport run_lab(const std::vector<CorpusEntry>& corpus, const LabOptions& opt) {
    validate_suites(opt.suites);
    LabReport lab;
    lab.options = opt;
    const unsigned workers = opt.workers ? opt.workers : default_workers();
    auto copt = opt.classify;
    copt.workers = 1;  // parallelism is across rings

    lab.rings.resize(corpus.size());
    parallel_for(corpus.size(), workers, [&](std::size_t i) {
        auto& rr = lab.rings[i];
        rr.spec = corpus[i].spec;
        rr.label = ring_label(corpus[i].ring);
        rr.finite = is_finite(corpus[i].ring);
        try {
            rr.report = classify(corpus[i].ring, copt);
        } catch (const Error& e) {
            rr.error_code = e.code();
            rr.error = e.what();
        }
    });

    LabOptions inner = opt;
    inner.classify = copt;
    for (const auto& id : suite_ids()) {
        if (std::find(opt.suites.begin(), opt.suites.end(), id) == opt.suites.end()) continue;
        SuiteResult s{id, {}};
        if (id == "examples") {
            s.entries = detail::example_entries(inner);
        } else {
            s.entries.resize(corpus.size());
            parallel_for(corpus.size(), workers, [&](std::size_t i) {
                const auto& rr = lab.rings[i];
                const auto& ring = corpus[i].ring;
                auto run = [&]() -> SuiteEntry {
                    if (id == "t1") return detail::route_suite_entry(rr, "distributivity", {"r7"});
                    if (id == "t2") return detail::t2_entry(rr, ring, inner);
                    if (id == "t3") return detail::route_suite_entry(rr, "residual-identities", {"r9", "r10"});
                    if (id == "t4") return detail::route_suite_entry(rr, "product-identity", {"r11"});
                    if (id == "t5") return detail::t5_entry(rr);
                    if (id == "cor0") return detail::cor0_entry(rr);
                    if (id == "t11") return detail::t11_entry(rr, ring, inner);
                    if (id == "pi") return detail::pi_entry(rr, ring, inner);
                    return detail::diagram_entry(rr);
                };
                try {
                    s.entries[i] = run();
                } catch (const Error& e) {
                    const bool bug = e.code() == ErrorCode::InternalInconsistency;
                    s.entries[i] = {rr.spec, id, bug ? Status::Fail : Status::Inconclusive, e.what()};
                }
            });
        }
        lab.suites.push_back(std::move(s));
    }
    return lab;
}

}  // namespace philab
