// End-to-end acceptance run: one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-philab-cli>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "philab/theoremlab/emit.hpp"

using namespace philab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

DividedExtRing divext(const Domain& d) { return DividedExtRing(d, ModuleTag::FractionsModD); }

std::string fmt_secs(double s) {
    std::ostringstream o;
    o.precision(3);
    o << s << " s";
    return o.str();
}

Outcome example_one() {
    Outcome out;
    const auto t0 = Clock::now();
    const auto R = make_truncated_poly(2, {2, 2});
    const auto rep = classify_finite(R);
    for (const char* p : {"phi_ring", "phi_vnr", "phi_prufer"})
        out.require(rep.property(p).value == Truth::True, std::string(p) + " is " + to_string(rep.property(p).value));
    out.require(rep.routes.size() == 13, std::to_string(rep.routes.size()) + " routes");
    for (const auto& [k, v] : rep.routes) out.require(v.value == Truth::True, k + " is " + to_string(v.value));

    GaussianOptions g;
    g.deg_bound = 1;
    const auto all = ring_gaussian_checks(R, g).gaussian_all_f;
    out.require(!all.holds && all.witness.has_value(), "Gaussian(all f, deg<=1) not refuted");
    if (all.witness) {
        const auto& w = *all.witness;
        const auto cfcg = ideal_product(content(w.f), content(w.g));
        const auto xy = principal(R, *R->find("x*y"));
        out.require(w.f.to_string() == "xZ+y" && w.g.to_string() == "xZ+y",
                    "witness pair is (" + w.f.to_string() + ", " + w.g.to_string() + ")");
        out.require(poly_mul(w.f, w.g).is_zero(), "fg is not 0");
        out.require(cfcg == xy && !xy.is_zero(), "c(f)c(g) = " + cfcg.to_string());
        out.detail = "witness f=g=xZ+y, fg=0, c(f)c(g)=" + cfcg.to_string();
    }
    g.deg_bound = 2;
    const auto nn = ring_gaussian_checks(R, g).gaussian_nonnil_f;
    out.require(nn.holds, "gaussian_nonnil_f(deg<=2) fails");
    out.require(nn.pairs >= 10'000, "only " + std::to_string(nn.pairs) + " pairs");
    const double secs = seconds_since(t0);
    out.require(secs < 30, "took " + fmt_secs(secs));
    if (out.ok) out.detail += "; nonnil-f bound 2 holds on " + std::to_string(nn.pairs) + " pairs; " + fmt_secs(secs);
    return out;
}

Outcome annihilators() {
    Outcome out;
    const auto t0 = Clock::now();
    const auto R = divext(Domain::localized(2));
    const auto x = R.make(FieldElem(2), {});
    const auto y = R.make({}, FieldElem(Rational(1, 2)));
    const auto a = annihilator_membership(R, x, y, 1000, 42);
    out.require(a.y_in_ann_x, "(0,1/2) ∉ Ann((2,0))");
    out.require(a.x_in_ann_y, "(2,0) ∉ Ann((0,1/2))");
    out.require(a.samples_ann_x >= 1000 && a.samples_ann_y >= 1000, "too few samples");
    out.require(a.failures == 0, std::to_string(a.failures) + " samples outside: " + a.witness);
    const double secs = seconds_since(t0);
    out.require(secs < 5, "took " + fmt_secs(secs));
    if (out.ok)
        out.detail = std::to_string(a.samples_ann_x) + "+" + std::to_string(a.samples_ann_y) +
                     " sampled annihilators inside the principal ideals; " + fmt_secs(secs);
    return out;
}

Outcome route_agreement() {
    Outcome out;
    const auto t0 = Clock::now();
    const auto corpus = build_corpus(default_corpus_specs());
    out.require(corpus.size() >= 25, "corpus has " + std::to_string(corpus.size()) + " rings");
    std::size_t phi = 0, pairs = 0;
    for (const auto& e : corpus) {
        if (is_phi_ring(e.ring).value != Truth::True) continue;
        ++phi;
        std::map<std::string, Verdict> routes;
        try {
            routes = phi_prufer_multiroute(e.ring, {});
        } catch (const Error& err) {
            out.require(false, e.spec + ": " + err.what());
            continue;
        }
        for (auto i = routes.begin(); i != routes.end(); ++i)
            for (auto j = std::next(i); j != routes.end(); ++j) {
                if (!i->second.definite() || !j->second.definite()) continue;
                ++pairs;
                out.require(i->second.value == j->second.value, e.spec + ": " + i->first + " vs " + j->first);
            }
    }
    const double secs = seconds_since(t0);
    out.require(secs < 120, "took " + fmt_secs(secs));
    if (out.ok)
        out.detail = std::to_string(corpus.size()) + " rings, " + std::to_string(phi) + " φ-rings, " + std::to_string(pairs) +
                     " definite route pairs agree; " + fmt_secs(secs);
    return out;
}

Outcome distributivity_biconditional() {
    Outcome out;
    std::string witness;
    for (const auto& d : {Domain::integers(), Domain::localized(2), Domain::quadratic(-1, 1), Domain::quadratic(-1, 2)}) {
        const auto R = divext(d);
        const auto routes = divided_phi_prufer_routes(R, {});
        const auto& r3 = routes.at("r3");
        const auto& r7 = routes.at("r7");
        out.require(r3.value == r7.value, R.label() + ": r3=" + to_string(r3.value) + ", r7=" + to_string(r7.value));
        if (d.kind() == DomainKind::Quad && d.f() == 2) {
            out.require(r3.value == Truth::False && r3.definite(), "ℤ[2i]: r3 is not a definite false");
            out.require(r7.value == Truth::False && !r7.witness.empty(), "ℤ[2i]: no distributivity witness");
            witness = r7.witness;
        }
    }
    if (out.ok) out.detail = "r7 = r3 on Z, Z_(2), Z[i], Z[2i]; Z[2i] witness " + witness;
    return out;
}

Outcome residual_identities() {
    Outcome out;
    const auto z = divided_phi_prufer_routes(divext(Domain::integers()), {});
    for (const char* r : {"r9", "r10", "r11"}) {
        const auto& v = z.at(r);
        out.require(v.value == Truth::True, std::string("Z: ") + r + " is " + to_string(v.value) + " " + v.witness);
        out.require(v.method.find("generator<=30") != std::string::npos, std::string("Z: ") + r + " method " + v.method);
    }
    const auto q = divided_phi_prufer_routes(divext(Domain::quadratic(-1, 2)), {});
    std::string hit;
    for (const char* r : {"r9", "r10", "r11"}) {
        const auto& v = q.at(r);
        if (v.value == Truth::False && v.definite() && !v.witness.empty() && v.method.find("norm<=64") != std::string::npos)
            hit += std::string(hit.empty() ? "" : ", ") + r;
    }
    out.require(!hit.empty(), "Z[2i]: no definite violation of the residual or product identities");
    if (out.ok) out.detail = "Z: r9, r10, r11 hold for generators <= 30; Z[2i] violations: " + hit;
    return out;
}

Outcome finite_gaussian() {
    Outcome out;
    const auto t0 = Clock::now();
    std::size_t rings = 0, pairs = 0;
    GaussianOptions g;
    g.deg_bound = 1;
    g.pair_budget = std::size_t{1} << 40;
    for (const auto& e : build_corpus(default_corpus_specs())) {
        const auto* f = std::get_if<RingPtr>(&e.ring);
        if (!f || (*f)->order() > 16 || is_phi_ring(e.ring).value != Truth::True) continue;
        ++rings;
        const auto v = nonnil_polys_gaussian(*f, g);
        pairs += v.pairs;
        out.require(!v.sampled, e.spec + ": sampled instead of swept");
        out.require(v.holds, e.spec + ": " + (v.witness ? v.witness->f.to_string() + " · " + v.witness->g.to_string() : ""));
    }
    out.require(rings > 0, "no finite φ-rings of order <= 16");
    const double secs = seconds_since(t0);
    out.require(secs < 60, "took " + fmt_secs(secs));
    if (out.ok)
        out.detail = std::to_string(rings) + " finite φ-rings, " + std::to_string(pairs) + " pairs, no violation; " + fmt_secs(secs);
    return out;
}

Outcome semilocal_bezout() {
    Outcome out;
    const auto rep = check_t11_bezout(divext(Domain::localized(2)), {});
    out.require(rep.applicable, "not semilocal φ-Prüfer");
    out.require(rep.semilocal.value == Truth::True, "semilocal is " + to_string(rep.semilocal.value));
    out.require(rep.phi_prufer.value == Truth::True, "φ-Prüfer is " + to_string(rep.phi_prufer.value));
    out.require(rep.phi_bezout.value == Truth::True, "φ-Bézout is " + to_string(rep.phi_bezout.value) + " " + rep.phi_bezout.witness);
    out.require(rep.checked == 21 * 21, std::to_string(rep.checked) + " ideals checked");
    if (out.ok) out.detail = std::to_string(rep.checked) + " two-generated nonnil ideals, exponents <= 20, all principal";
    return out;
}

Outcome primary_irreducible() {
    Outcome out;
    const auto rep = check_primary_irreducible(divext(Domain::integers()), 200);
    out.require(rep.hypothesis, "nonnil primes not maximal");
    out.require(rep.rows.size() == 199, std::to_string(rep.rows.size()) + " rows");
    auto prime_power = [](Int n) {
        Int p = 2;
        while (n % p) ++p;
        while (n % p == 0) n /= p;
        return n == 1;
    };
    for (const auto& row : rep.rows) {
        const bool pp = prime_power(row.n);
        if (row.primary != pp || row.irreducible != pp) out.require(false, "n=" + std::to_string(row.n));
        if (row.n == 12)
            out.require(!row.primary_witness.empty() && !row.irreducible_witness.empty(), "n=12 lacks witnesses");
        if (row.n == 8) out.require(row.primary && row.irreducible, "n=8 fails");
    }
    if (out.ok) out.detail = "primary ⟺ irreducible ⟺ prime power for 2 <= n <= 200";
    return out;
}

Outcome negative_gates() {
    Outcome out;
    for (const char* spec : {"Zn:6", "Zn:12", "prod:Zn:2|Zn:2", "selfext:Z"}) {
        const auto v = is_phi_ring(parse_ring(spec));
        out.require(v.value == Truth::False && v.definite(), std::string(spec) + ": φ-ring is " + to_string(v.value));
        out.require(!v.witness.empty(), std::string(spec) + ": no witness");
    }
    const auto z6 = parse_ring("Zn:6");
    out.require(classify(z6).property("classical_prufer").value == Truth::True, "Z/6 not classically Prüfer");
    LabOptions opt;
    opt.suites = {"diagram"};
    const auto lab = run_lab(build_corpus({"Zn:6"}), opt);
    const auto& e = lab.suites.at(0).entries.at(0);
    out.require(e.detail.find("Prüfer ⇏ φ-ring datapoint") != std::string::npos, "diagram datapoint missing: " + e.detail);
    if (out.ok) out.detail = "Z/6, Z/12, Z/2×Z/2, Z⋉Z not φ with witnesses; Z/6 classically Prüfer";
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& cli) {
    Outcome out;
    if (cli.empty()) {
        out.require(false, "no CLI path given");
        return out;
    }
    std::string files[2];
    for (int i = 0; i < 2; ++i) {
        char name[] = "/tmp/philab-acceptance-XXXXXX";
        const int fd = mkstemp(name);
        if (fd >= 0) close(fd);
        files[i] = name;
        const std::string cmd = "'" + cli + "' check --suite all --seed 42 -o '" + files[i] + "' 2>/dev/null";
        const int rc = std::system(cmd.c_str());
        out.require(rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "run " + std::to_string(i + 1) + " exited " + std::to_string(rc));
    }
    const auto a = slurp(files[0]), b = slurp(files[1]);
    out.require(!a.empty(), "empty report");
    out.require(a == b, "reports differ");
    for (const auto& f : files) std::remove(f.c_str());
    if (out.ok) out.detail = std::to_string(a.size()) + " bytes, identical across two runs";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 example one", example_one},
        {"2 annihilators", annihilators},
        {"3 route agreement", route_agreement},
        {"4 distributivity biconditional", distributivity_biconditional},
        {"5 residual and product identities", residual_identities},
        {"6 finite gaussian", finite_gaussian},
        {"7 semilocal bezout", semilocal_bezout},
        {"8 primary irreducible", primary_irreducible},
        {"9 negative gates", negative_gates},
        {"10 determinism", [&] { return determinism(cli); }},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}
