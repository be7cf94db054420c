#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "philab/core/element_set.hpp"
#include "philab/core/error.hpp"

namespace philab {

/// Largest order any constructor will build unless told otherwise.
inline constexpr std::size_t kDefaultOrderCap = 256;
/// Rings up to this order get exhaustive axiom verification on construction.
inline constexpr std::size_t kVerifyOrderCap = 64;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

namespace detail {
struct IdealCache;
}

/// A commutative ring with nonzero identity given by explicit operation
/// tables over the element indices 0..order-1.
///
/// Instances are immutable once built. The nilradical, unit group and
/// zerodivisor set are computed eagerly; the ideal lattice is computed on
/// first request and memoized (see idealcalc).
class FiniteRing {
public:
    FiniteRing(std::size_t order, std::vector<Elem> add_table, std::vector<Elem> mul_table, Elem zero,
               Elem one, std::string label, std::vector<std::string> names)
        : order_(order),
          add_(std::move(add_table)),
          mul_(std::move(mul_table)),
          zero_(zero),
          one_(one),
          label_(std::move(label)),
          names_(std::move(names)),
          cache_(std::make_shared<Cache>()) {
        if (order_ < 2) throw Error(ErrorCode::InvalidOrder, "ring must have a nonzero identity");
        if (add_.size() != order_ * order_ || mul_.size() != order_ * order_)
            throw Error(ErrorCode::InvalidOrder, "operation tables do not match the order");
        if (zero_ == one_) throw Error(ErrorCode::InvalidOrder, "zero equals one");
        if (names_.size() != order_) {
            names_.resize(order_);
            for (std::size_t i = 0; i < order_; ++i) names_[i] = std::to_string(i);
        }
        build_derived();
    }

    std::size_t order() const { return order_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    const std::string& label() const { return label_; }

    Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem pow(Elem a, std::size_t k) const {
        Elem r = one_;
        for (std::size_t i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }
    /// Additive multiple n·a.
    Elem times(std::size_t n, Elem a) const {
        Elem r = zero_;
        for (std::size_t i = 0; i < n; ++i) r = add(r, a);
        return r;
    }

    const std::string& name(Elem a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Resolves an element by its printed name, or by a decimal index.
    std::optional<Elem> find(std::string_view text) const {
        if (auto it = by_name_.find(std::string(text)); it != by_name_.end()) return it->second;
        if (!text.empty() && text.find_first_not_of("0123456789") == std::string_view::npos && text.size() < 10) {
            const auto idx = std::stoul(std::string(text));
            if (idx < order_) return static_cast<Elem>(idx);
        }
        return std::nullopt;
    }

    const ElementSet& nilpotents() const { return nil_; }
    const ElementSet& units() const { return units_; }
    const ElementSet& zerodivisors() const { return zd_; }
    bool is_nilpotent(Elem a) const { return nil_.contains(a); }
    bool is_unit(Elem a) const { return units_.contains(a); }
    std::optional<Elem> inverse(Elem a) const {
        if (inv_[a] == kNone) return std::nullopt;
        return inv_[a];
    }

    /// Smallest k ≥ 1 with a^k = 0, or nullopt when a is not nilpotent.
    std::optional<std::size_t> nilpotency_index(Elem a) const {
        Elem p = a;
        for (std::size_t k = 1; k <= order_; ++k) {
            if (p == zero_) return k;
            p = mul(p, a);
        }
        return std::nullopt;
    }

    /// Exhaustive check of the commutative-ring axioms. Returns a description
    /// of the first failure, or nullopt.
    std::optional<std::string> axiom_failure() const {
        const auto n = static_cast<Elem>(order_);
        for (Elem a = 0; a < n; ++a) {
            if (add(a, zero_) != a) return "zero is not an additive identity for " + name(a);
            if (mul(a, one_) != a) return "one is not a multiplicative identity for " + name(a);
            if (neg_[a] == kNone) return "no additive inverse for " + name(a);
            for (Elem b = 0; b < n; ++b) {
                if (add(a, b) != add(b, a)) return "addition not commutative at " + name(a) + "," + name(b);
                if (mul(a, b) != mul(b, a)) return "multiplication not commutative at " + name(a) + "," + name(b);
                for (Elem c = 0; c < n; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c))) return "addition not associative";
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "multiplication not associative";
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return "distributivity fails";
                }
            }
        }
        return std::nullopt;
    }

    /// Shared lazily-filled caches (ideal lattice). Copies of a ring share
    /// them, which is sound because the tables are identical.
    struct Cache {
        std::mutex mutex;
        std::shared_ptr<const void> ideals;  // holds detail::IdealCache
    };
    Cache& cache() const { return *cache_; }

private:
    static constexpr Elem kNone = static_cast<Elem>(-1);

    void build_derived() {
        const auto n = static_cast<Elem>(order_);
        neg_.assign(order_, kNone);
        inv_.assign(order_, kNone);
        nil_ = ElementSet(order_);
        units_ = ElementSet(order_);
        zd_ = ElementSet(order_);
        for (Elem a = 0; a < n; ++a) {
            for (Elem b = 0; b < n; ++b) {
                if (neg_[a] == kNone && add(a, b) == zero_) neg_[a] = b;
                if (inv_[a] == kNone && mul(a, b) == one_) inv_[a] = b;
                if (b != zero_ && mul(a, b) == zero_) zd_.insert(a);
            }
            if (inv_[a] != kNone) units_.insert(a);
            if (nilpotency_index(a)) nil_.insert(a);
            by_name_.emplace(names_[a], a);
        }
    }

    std::size_t order_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    Elem zero_;
    Elem one_;
    std::string label_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Elem> by_name_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
    ElementSet nil_;
    ElementSet units_;
    ElementSet zd_;
    std::shared_ptr<Cache> cache_;
};

/// Nilpotent elements of R as a membership bitmap. The ideal-valued
/// `nilradical` lives in idealcalc.
inline const ElementSet& nilpotent_elements(const FiniteRing& r) { return r.nilpotents(); }
inline const ElementSet& zerodivisors(const FiniteRing& r) { return r.zerodivisors(); }
inline const ElementSet& units(const FiniteRing& r) { return r.units(); }

}  // namespace philab
