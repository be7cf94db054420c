#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "philab/core/rng.hpp"
#include "philab/core/workers.hpp"
#include "philab/polycontent/poly.hpp"

namespace philab {

inline constexpr std::size_t kDefaultPairBudget = 1'000'000;
inline constexpr std::size_t kDefaultGaussianSamples = 10'000;

struct GaussianOptions {
    int deg_bound = 1;
    std::size_t pair_budget = kDefaultPairBudget;  // full sweep at or below this many ordered pairs
    std::size_t samples = kDefaultGaussianSamples;
    std::uint64_t seed = 42;
    unsigned workers = 0;  // 0: default_workers()
};

struct GaussianWitness {
    Poly f;
    Poly g;
    Poly fg;
    FiniteIdeal c_fg;
    FiniteIdeal cf_cg;
};

struct GaussianVerdict {
    bool holds = true;
    std::optional<GaussianWitness> witness;
    int deg_bound = 0;
    bool sampled = false;
    std::size_t pairs = 0;  // pairs actually compared
    std::string method;
};

/// Which pairs the content formula is required for: all f, g; non-nilpotent
/// f and g; non-nilpotent f against every g (f is Gaussian).
enum class GaussianMode { AllPairs, NonnilPairs, NonnilF };

struct RingGaussian {
    GaussianVerdict gaussian_all_f;
    GaussianVerdict gaussian_nonnil_f;
};

/// Interns content ideals by coefficient set and memoizes their products.
class ContentMemo {
public:
    explicit ContentMemo(RingPtr ring) : ring_(std::move(ring)) {}

    std::size_t content_id(const Elem* c, std::size_t len) {
        ElementSet key(ring_->order());
        for (std::size_t i = 0; i < len; ++i) key.insert(c[i]);
        if (auto it = by_coeffs_.find(key); it != by_coeffs_.end()) return it->second;
        std::vector<Elem> gens = key.elements();
        const std::size_t id = intern(span(ring_, gens).members());
        by_coeffs_.emplace(std::move(key), id);
        return id;
    }

    std::size_t product_id(std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (auto it = products_.find(key); it != products_.end()) return it->second;
        const std::size_t id = intern(ideal_product(ideal(a), ideal(b)).members());
        products_.emplace(key, id);
        return id;
    }

    FiniteIdeal ideal(std::size_t id) const { return FiniteIdeal(ring_, ideals_[id]); }

private:
    std::size_t intern(const ElementSet& s) {
        if (auto it = ids_.find(s); it != ids_.end()) return it->second;
        ideals_.push_back(s);
        ids_.emplace(s, ideals_.size() - 1);
        return ideals_.size() - 1;
    }

    RingPtr ring_;
    std::vector<ElementSet> ideals_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> ids_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> by_coeffs_;
    std::unordered_map<std::uint64_t, std::size_t> products_;
};

namespace detail {

inline std::size_t poly_count(std::size_t order, int deg_bound) {
    std::size_t n = 1;
    for (int i = 0; i <= deg_bound; ++i) {
        if (n > (std::size_t{1} << 40) / order) throw Error(ErrorCode::BudgetExceeded, "polynomial space too large");
        n *= order;
    }
    return n;
}

/// Fixed-length digit buffers for index-addressed polynomials.
struct PairChecker {
    const FiniteRing& r;
    std::size_t len;
    ContentMemo memo;
    std::vector<Elem> f, g, fg;

    PairChecker(const RingPtr& ring, int deg_bound)
        : r(*ring), len(static_cast<std::size_t>(deg_bound) + 1), memo(ring), f(len), g(len), fg(2 * len - 1) {}

    void load(std::vector<Elem>& dst, std::size_t index) const {
        for (auto& e : dst) {
            e = static_cast<Elem>(index % r.order());
            index /= r.order();
        }
    }

    /// c(fg) = c(f)c(g) for the loaded f, g.
    bool holds() {
        std::fill(fg.begin(), fg.end(), r.zero());
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; j < len; ++j) fg[i + j] = r.add(fg[i + j], r.mul(f[i], g[j]));
        const std::size_t lhs = memo.content_id(fg.data(), fg.size());
        const std::size_t rhs = memo.product_id(memo.content_id(f.data(), len), memo.content_id(g.data(), len));
        return lhs == rhs;
    }
};

inline bool index_is_nilpotent(const FiniteRing& r, std::size_t index, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i, index /= r.order())
        if (!r.is_nilpotent(static_cast<Elem>(index % r.order()))) return false;
    return true;
}

inline GaussianWitness make_witness(const RingPtr& ring, std::size_t fi, std::size_t gi, int deg_bound) {
    const std::size_t len = static_cast<std::size_t>(deg_bound) + 1;
    Poly f = Poly::from_index(ring, fi, len), g = Poly::from_index(ring, gi, len);
    Poly fg = poly_mul(f, g);
    FiniteIdeal c_fg = content(fg);
    FiniteIdeal cf_cg = ideal_product(content(f), content(g));
    return {std::move(f), std::move(g), std::move(fg), std::move(c_fg), std::move(cf_cg)};
}

struct SweepResult {
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::size_t pairs = 0;
};

/// Exhaustive sweep over f ∈ fs, g ∈ gs (sorted indices); when the two
/// lists coincide only pairs f ≤ g are compared. The reported witness is the
/// lexicographically smallest failing pair, independent of the worker count.
inline SweepResult exhaustive_sweep(const RingPtr& ring, int deg_bound, const std::vector<std::size_t>& fs,
                                    const std::vector<std::size_t>& gs, unsigned workers) {
    const bool symmetric = fs == gs;
    const unsigned w = workers == 0 ? default_workers() : workers;
    std::vector<SweepResult> parts(std::max(1U, std::min<unsigned>(w, static_cast<unsigned>(std::max<std::size_t>(fs.size(), 1)))));
    parallel_slices(fs.size(), static_cast<unsigned>(parts.size()), [&](unsigned k, std::size_t lo, std::size_t hi) {
        PairChecker pc(ring, deg_bound);
        auto& out = parts[k];
        for (std::size_t a = lo; a < hi && !out.witness; ++a) {
            pc.load(pc.f, fs[a]);
            for (std::size_t b = symmetric ? a : 0; b < gs.size(); ++b) {
                pc.load(pc.g, gs[b]);
                ++out.pairs;
                if (!pc.holds()) {
                    out.witness = {a, b};
                    break;
                }
            }
        }
    });
    SweepResult res;
    for (const auto& p : parts) {
        if (p.witness && !res.witness) res.witness = p.witness;
        res.pairs += p.pairs;
    }
    if (res.witness) {
        // pairs up to and including the witness in sweep order, so the count
        // does not depend on the slicing
        const auto [a, b] = *res.witness;
        const std::size_t n = gs.size();
        res.pairs = symmetric ? a * n - a * (a - 1) / 2 + (b - a) + 1 : a * n + b + 1;
        res.witness = std::pair{fs[a], gs[b]};
    }
    return res;
}

inline std::vector<std::size_t> poly_indices(const FiniteRing& r, int deg_bound, bool nonnil_only) {
    const std::size_t total = poly_count(r.order(), deg_bound), len = static_cast<std::size_t>(deg_bound) + 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < total; ++i)
        if (!nonnil_only || !index_is_nilpotent(r, i, len)) out.push_back(i);
    return out;
}

inline std::string exhaustive_method(int d) { return "exhaustive(deg<=" + std::to_string(d) + ")"; }

inline GaussianVerdict gaussian_variant(const RingPtr& ring, GaussianMode mode, const GaussianOptions& opt,
                                        const std::string& tag) {
    const bool nonnil_f = mode != GaussianMode::AllPairs, nonnil_g = mode == GaussianMode::NonnilPairs;
    const auto& r = *ring;
    const std::size_t len = static_cast<std::size_t>(opt.deg_bound) + 1;
    const std::size_t total = poly_count(r.order(), opt.deg_bound);
    GaussianVerdict v;
    v.deg_bound = opt.deg_bound;

    auto run_exhaustive = [&](int d) {
        const auto fs = poly_indices(r, d, nonnil_f), gs = poly_indices(r, d, nonnil_g);
        const auto sw = exhaustive_sweep(ring, d, fs, gs, opt.workers);
        v.pairs += sw.pairs;
        if (sw.witness && v.holds) {
            v.holds = false;
            v.witness = make_witness(ring, sw.witness->first, sw.witness->second, d);
        }
    };

    // ordered pair count of the full domain at the requested bound
    const bool fits = total <= opt.pair_budget / std::max<std::size_t>(total, 1);
    if (fits) {
        run_exhaustive(opt.deg_bound);
        v.method = exhaustive_method(opt.deg_bound);
        return v;
    }

    // largest lower bound that still fits gets a full sweep first
    int lower = -1;
    for (int d = opt.deg_bound - 1; d >= 0; --d) {
        const std::size_t n = poly_count(r.order(), d);
        if (n <= opt.pair_budget / n) {
            lower = d;
            break;
        }
    }
    if (lower >= 0) run_exhaustive(lower);

    v.sampled = true;
    constexpr std::size_t kChunk = 1000;
    const std::size_t chunks = (opt.samples + kChunk - 1) / kChunk;
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> found(chunks);
    parallel_slices(chunks, opt.workers == 0 ? default_workers() : opt.workers, [&](unsigned, std::size_t lo, std::size_t hi) {
        PairChecker pc(ring, opt.deg_bound);
        for (std::size_t c = lo; c < hi; ++c) {
            SeededRng rng(split_seed(opt.seed, tag + "/" + std::to_string(c)));
            auto draw = [&](bool nonnil) {
                for (;;) {
                    const std::size_t i = static_cast<std::size_t>(rng.below(total));
                    if (!nonnil || !index_is_nilpotent(r, i, len)) return i;
                }
            };
            const std::size_t n = std::min(kChunk, opt.samples - c * kChunk);
            for (std::size_t s = 0; s < n; ++s) {
                const std::size_t fi = draw(nonnil_f), gi = draw(nonnil_g);
                pc.load(pc.f, fi);
                pc.load(pc.g, gi);
                if (!pc.holds()) {
                    found[c] = {fi, gi};
                    break;
                }
            }
        }
    });
    v.pairs += opt.samples;
    for (const auto& w : found)
        if (w && v.holds) {
            v.holds = false;
            v.witness = make_witness(ring, w->first, w->second, opt.deg_bound);
        }
    v.method = "sampled(seed=" + std::to_string(opt.seed) + ",budget=" + std::to_string(opt.samples) + ",deg<=" +
               std::to_string(opt.deg_bound) + ")";
    if (lower >= 0) v.method += "+" + exhaustive_method(lower);
    return v;
}

}  // namespace detail

/// Checks c(fg) = c(f)c(g) for every g of degree ≤ deg_bound. The first
/// failing g in enumeration order is the witness.
inline GaussianVerdict is_gaussian_poly(const Poly& f, int deg_bound, std::size_t pair_budget = kDefaultPairBudget) {
    const RingPtr& ring = f.ring();
    const std::size_t total = detail::poly_count(ring->order(), deg_bound);
    if (total > pair_budget)
        throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " polynomials exceed the pair budget");
    GaussianVerdict v;
    v.deg_bound = deg_bound;
    v.method = detail::exhaustive_method(deg_bound);
    const std::size_t flen = std::max<std::size_t>(f.coeffs().size(), 1), glen = static_cast<std::size_t>(deg_bound) + 1;
    ContentMemo memo(ring);
    const auto& r = *ring;
    std::vector<Elem> fc(flen, r.zero()), g(glen), fg(flen + glen - 1);
    std::copy(f.coeffs().begin(), f.coeffs().end(), fc.begin());
    const std::size_t cf = memo.content_id(fc.data(), flen);
    for (std::size_t gi = 0; gi < total; ++gi) {
        std::size_t x = gi;
        for (auto& e : g) {
            e = static_cast<Elem>(x % r.order());
            x /= r.order();
        }
        std::fill(fg.begin(), fg.end(), r.zero());
        for (std::size_t i = 0; i < flen; ++i)
            for (std::size_t j = 0; j < glen; ++j) fg[i + j] = r.add(fg[i + j], r.mul(fc[i], g[j]));
        ++v.pairs;
        if (memo.content_id(fg.data(), fg.size()) != memo.product_id(cf, memo.content_id(g.data(), glen))) {
            Poly gp(ring, g);
            Poly prod = poly_mul(f, gp);
            FiniteIdeal c_fg = content(prod);
            FiniteIdeal cf_cg = ideal_product(content(f), content(gp));
            v.holds = false;
            v.witness = GaussianWitness{f, std::move(gp), std::move(prod), std::move(c_fg), std::move(cf_cg)};
            break;
        }
    }
    return v;
}

/// gaussian_all_f: c(fg) = c(f)c(g) for all f, g of degree ≤ bound.
/// gaussian_nonnil_f: the same restricted to non-nilpotent f and g.
/// Domains above the pair budget are sampled (seeded) after a full sweep at
/// the largest lower degree that fits.
inline RingGaussian ring_gaussian_checks(const RingPtr& ring, const GaussianOptions& opt = {}) {
    if (opt.deg_bound < 0) throw Error(ErrorCode::InvalidOrder, "degree bound must be >= 0");
    return {detail::gaussian_variant(ring, GaussianMode::AllPairs, opt, ring->label() + "/all"),
            detail::gaussian_variant(ring, GaussianMode::NonnilPairs, opt, ring->label() + "/nonnil")};
}

/// Every non-nilpotent f of degree ≤ bound is Gaussian against all g of
/// degree ≤ bound.
inline GaussianVerdict nonnil_polys_gaussian(const RingPtr& ring, const GaussianOptions& opt = {}) {
    if (opt.deg_bound < 0) throw Error(ErrorCode::InvalidOrder, "degree bound must be >= 0");
    return detail::gaussian_variant(ring, GaussianMode::NonnilF, opt, ring->label() + "/nonnil-f");
}

}  // namespace philab
