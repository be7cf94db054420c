#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "philab/dividedext/ring.hpp"
#include "philab/domainkit/oracles.hpp"
#include "philab/finring/ring.hpp"
#include "philab/idealcalc/lattice.hpp"
#include "philab/phiclass/verdict.hpp"
#include "philab/polycontent/gaussian.hpp"

namespace philab {

using AnyRing = std::variant<RingPtr, DividedExtRing>;

inline std::string ring_label(const AnyRing& r) {
    if (const auto* f = std::get_if<RingPtr>(&r)) return (*f)->label();
    return std::get<DividedExtRing>(r).label();
}

inline bool is_finite(const AnyRing& r) { return std::holds_alternative<RingPtr>(r); }

struct ClassifyOptions {
    int deg_bound = 1;
    std::size_t pair_budget = kDefaultPairBudget;
    std::size_t gaussian_samples = kDefaultGaussianSamples;
    std::uint64_t seed = 42;
    Int norm_bound = kDefaultNormBound;
    Int generator_bound = kDefaultGeneratorBound;
    Int exponent_bound = kDefaultExponentBound;
    std::size_t divided_samples = 1000;
    std::size_t ideal_budget = kDefaultIdealBudget;
    unsigned workers = 0;
    bool weaken_distributivity = false;  // mutation hook for tests

    GaussianOptions gaussian() const {
        GaussianOptions g;
        g.deg_bound = deg_bound;
        g.pair_budget = pair_budget;
        g.samples = gaussian_samples;
        g.seed = seed;
        g.workers = workers;
        return g;
    }
};

/// Route identifiers for the φ-Prüfer characterizations and their short names.
inline const std::map<std::string, std::string>& route_names() {
    static const std::map<std::string, std::string> names = {
        {"r2", "phi-image-prufer"},          {"r3", "quotient-domain"},
        {"r4", "phi-image-quotient-domain"}, {"r5", "local-valuation-primes"},
        {"r6", "local-valuation-maximals"},  {"r7", "lattice-distributivity"},
        {"r8", "factorization"},             {"r9", "residual-sum"},
        {"r10", "residual-intersection"},    {"r11", "product-identity"},
        {"r12", "locally-principal"},        {"r13", "nonnil-polys-gaussian"},
        {"r14", "content-formula"},
    };
    return names;
}

struct ClassificationReport {
    std::string ring;
    std::string family;  // "finite" or "divided"
    std::map<std::string, Verdict> properties;
    std::map<std::string, Verdict> routes;
    std::vector<std::string> notes;

    const Verdict& property(const std::string& name) const {
        auto it = properties.find(name);
        if (it == properties.end()) throw Error(ErrorCode::InternalInconsistency, "no property " + name + " for " + ring);
        return it->second;
    }
};

/// Agreement of the definite route verdicts. Contradicting definite routes
/// raise InternalInconsistency; with no definite route the strongest
/// available answer (bounded true, else inconclusive) is returned.
inline Verdict route_consensus(const std::map<std::string, Verdict>& routes, const std::string& ring) {
    std::vector<std::string> yes, no;
    bool bounded_yes = false;
    const Verdict* first_no = nullptr;
    for (const auto& [name, v] : routes) {
        if (v.definite()) {
            (v.value == Truth::True ? yes : no).push_back(name);
            if (v.value == Truth::False && !first_no) first_no = &v;
        } else if (v.value == Truth::True) {
            bounded_yes = true;
        }
    }
    auto join = [](const std::vector<std::string>& xs) {
        std::string s;
        for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
        return s;
    };
    if (!yes.empty() && !no.empty())
        throw Error(ErrorCode::InternalInconsistency, ring + ": routes {" + join(yes) + "} say true but {" + join(no) +
                                                          "} say false (" + first_no->witness + ")");
    if (!no.empty()) return Verdict::no(first_no->witness, "consensus(" + join(no) + ")");
    if (!yes.empty()) return Verdict::yes("consensus(" + join(yes) + ")");
    if (bounded_yes) return Verdict::up_to_bound("consensus(bounded routes only)");
    return Verdict::unknown("no route decided");
}

/// Runs `body`, turning domain errors into an inconclusive verdict.
/// InternalInconsistency signals a bug and is rethrown.
template <class F>
Verdict guarded(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InternalInconsistency) throw;
        return Verdict::unknown(e.what(), "error:" + std::string(to_string(e.code())));
    }
}

}  // namespace philab
