#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "philab/phiclass/verdict.hpp"

namespace philab {

/// Interned ideals with memoized lattice operations. Works for any ideal
/// type with ideal_sum / ideal_intersection / ideal_product / residual
/// overloads and an ordered key.
template <class Ideal, class Key>
class IdealTable {
public:
    using KeyFn = std::function<Key(const Ideal&)>;
    using LabelFn = std::function<std::string(const Ideal&)>;

    IdealTable(KeyFn key, LabelFn label) : key_(std::move(key)), label_(std::move(label)) {}

    std::size_t intern(const Ideal& i) {
        Key k = key_(i);
        if (auto it = ids_.find(k); it != ids_.end()) return it->second;
        ideals_.push_back(i);
        ids_.emplace(std::move(k), ideals_.size() - 1);
        return ideals_.size() - 1;
    }

    const Ideal& at(std::size_t id) const { return ideals_[id]; }
    std::string name(std::size_t id) const { return label_(ideals_[id]); }

    std::size_t sum(std::size_t a, std::size_t b) {
        return memo(sum_, std::min(a, b), std::max(a, b), [&] { return ideal_sum(ideals_[a], ideals_[b]); });
    }
    std::size_t meet(std::size_t a, std::size_t b) {
        return memo(meet_, std::min(a, b), std::max(a, b), [&] { return ideal_intersection(ideals_[a], ideals_[b]); });
    }
    std::size_t prod(std::size_t a, std::size_t b) {
        return memo(prod_, std::min(a, b), std::max(a, b), [&] { return ideal_product(ideals_[a], ideals_[b]); });
    }
    /// (a : b)
    std::size_t resid(std::size_t a, std::size_t b) {
        return memo(resid_, a, b, [&] { return residual(ideals_[a], ideals_[b]); });
    }
    bool subset(std::size_t a, std::size_t b) const { return ideals_[a].is_subset_of(ideals_[b]); }

private:
    template <class F>
    std::size_t memo(std::unordered_map<std::uint64_t, std::size_t>& m, std::size_t a, std::size_t b, F&& make) {
        const std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
        if (auto it = m.find(k); it != m.end()) return it->second;
        const std::size_t id = intern(make());
        m.emplace(k, id);
        return id;
    }

    KeyFn key_;
    LabelFn label_;
    std::vector<Ideal> ideals_;
    std::map<Key, std::size_t> ids_;
    std::unordered_map<std::uint64_t, std::size_t> sum_, meet_, prod_, resid_;
};

namespace detail {

inline Verdict sweep_pass(bool bounded, const std::string& method, const std::string& citation) {
    return bounded ? Verdict::up_to_bound(method, citation) : Verdict::yes(method, citation);
}

}  // namespace detail

/// Identity sweeps over ideal ids. Each visits its index tuples in
/// lexicographic order and stops at the first failure, so the witness is the
/// smallest failing tuple.
struct SweepSpec {
    std::string method;
    bool bounded = false;
    bool weaken_distributivity = false;  // test hook: compares I∩(J+K) with I∩J only
};

inline constexpr const char* kCiteDistributive = "lattice of nonnil ideals is distributive";
inline constexpr const char* kCiteFactorization = "I ⊆ J, J f.g. ⇒ I = J·K for a nonnil K";
inline constexpr const char* kCiteResidualSum = "(I+J):K = I:K + J:K";
inline constexpr const char* kCiteResidualMeet = "K:(I∩J) = K:I + K:J";
inline constexpr const char* kCiteProduct = "(I∩J)K = IK ∩ JK";

/// I ∩ (J + K) = I∩J + I∩K over nonnil I, J, K.
template <class T>
Verdict sweep_distributive(T& t, const std::vector<std::size_t>& nn, const SweepSpec& s) {
    for (auto i : nn)
        for (auto j : nn)
            for (auto k : nn) {
                const auto lhs = t.meet(i, t.sum(j, k));
                const auto rhs = s.weaken_distributivity ? t.meet(i, j) : t.sum(t.meet(i, j), t.meet(i, k));
                if (lhs != rhs)
                    return Verdict::no("I=" + t.name(i) + ", J=" + t.name(j) + ", K=" + t.name(k) + ": I∩(J+K)=" +
                                           t.name(lhs) + " but I∩J+I∩K=" + t.name(rhs),
                                       s.method, kCiteDistributive);
            }
    return detail::sweep_pass(s.bounded, s.method, kCiteDistributive);
}

/// For nonnil I ⊆ J: J·(I:J) = I (the exact existence criterion for K).
template <class T>
Verdict sweep_factorization(T& t, const std::vector<std::size_t>& nn, const SweepSpec& s) {
    for (auto i : nn)
        for (auto j : nn) {
            if (!t.subset(i, j)) continue;
            const auto back = t.prod(j, t.resid(i, j));
            if (back != i)
                return Verdict::no("I=" + t.name(i) + " ⊆ J=" + t.name(j) + ": J·(I:J)=" + t.name(back) +
                                       " ≠ I, so no K with I=JK",
                                   s.method, kCiteFactorization);
        }
    return detail::sweep_pass(s.bounded, s.method, kCiteFactorization);
}

/// (I+J):K = I:K + J:K for nonnil I, J and K from `ks`.
template <class T>
Verdict sweep_residual_sum(T& t, const std::vector<std::size_t>& nn, const std::vector<std::size_t>& ks,
                           const SweepSpec& s) {
    for (auto i : nn)
        for (auto j : nn)
            for (auto k : ks) {
                const auto lhs = t.resid(t.sum(i, j), k);
                const auto rhs = t.sum(t.resid(i, k), t.resid(j, k));
                if (lhs != rhs)
                    return Verdict::no("I=" + t.name(i) + ", J=" + t.name(j) + ", K=" + t.name(k) + ": (I+J):K=" +
                                           t.name(lhs) + " but I:K+J:K=" + t.name(rhs),
                                       s.method, kCiteResidualSum);
            }
    return detail::sweep_pass(s.bounded, s.method, kCiteResidualSum);
}

/// K:(I∩J) = K:I + K:J for nonnil I, J and K from `ks`.
template <class T>
Verdict sweep_residual_intersection(T& t, const std::vector<std::size_t>& nn, const std::vector<std::size_t>& ks,
                                    const SweepSpec& s) {
    for (auto i : nn)
        for (auto j : nn)
            for (auto k : ks) {
                const auto lhs = t.resid(k, t.meet(i, j));
                const auto rhs = t.sum(t.resid(k, i), t.resid(k, j));
                if (lhs != rhs)
                    return Verdict::no("I=" + t.name(i) + ", J=" + t.name(j) + ", K=" + t.name(k) + ": K:(I∩J)=" +
                                           t.name(lhs) + " but K:I+K:J=" + t.name(rhs),
                                       s.method, kCiteResidualMeet);
            }
    return detail::sweep_pass(s.bounded, s.method, kCiteResidualMeet);
}

/// (I∩J)·K = IK ∩ JK over nonnil I, J, K.
template <class T>
Verdict sweep_product_identity(T& t, const std::vector<std::size_t>& nn, const SweepSpec& s) {
    for (auto i : nn)
        for (auto j : nn)
            for (auto k : nn) {
                const auto lhs = t.prod(t.meet(i, j), k);
                const auto rhs = t.meet(t.prod(i, k), t.prod(j, k));
                if (lhs != rhs)
                    return Verdict::no("I=" + t.name(i) + ", J=" + t.name(j) + ", K=" + t.name(k) + ": (I∩J)K=" +
                                           t.name(lhs) + " but IK∩JK=" + t.name(rhs),
                                       s.method, kCiteProduct);
            }
    return detail::sweep_pass(s.bounded, s.method, kCiteProduct);
}

}  // namespace philab
