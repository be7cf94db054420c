#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "philab/finring/ring.hpp"

namespace philab {

/// A finite module over a FiniteRing: an abelian group table plus the
/// action table (ring element × module element → module element).
class FiniteModule {
public:
    FiniteModule(RingPtr base, std::size_t order, std::vector<Elem> add_table, std::vector<Elem> action, Elem zero,
                 std::string label, std::vector<std::string> names)
        : base_(std::move(base)),
          order_(order),
          add_(std::move(add_table)),
          act_(std::move(action)),
          zero_(zero),
          label_(std::move(label)),
          names_(std::move(names)) {
        if (order_ == 0 || add_.size() != order_ * order_ || act_.size() != base_->order() * order_)
            throw Error(ErrorCode::InvalidModule, "module tables do not match the declared orders");
        if (names_.size() != order_) {
            names_.resize(order_);
            for (std::size_t i = 0; i < order_; ++i) names_[i] = std::to_string(i);
        }
        if (auto failure = axiom_failure()) throw Error(ErrorCode::InvalidModule, *failure);
    }

    const RingPtr& base() const { return base_; }
    std::size_t order() const { return order_; }
    Elem zero() const { return zero_; }
    Elem add(Elem m, Elem n) const { return add_[m * order_ + n]; }
    Elem act(Elem r, Elem m) const { return act_[r * order_ + m]; }
    const std::string& label() const { return label_; }
    const std::string& name(Elem m) const { return names_[m]; }

    /// Exhaustive abelian-group, bilinearity and unitality check.
    std::optional<std::string> axiom_failure() const {
        const auto n = static_cast<Elem>(order_);
        const auto& r = *base_;
        const auto rn = static_cast<Elem>(r.order());
        for (Elem a = 0; a < n; ++a) {
            if (add(a, zero_) != a) return "zero is not an identity in the module";
            bool has_neg = false;
            for (Elem b = 0; b < n; ++b) {
                if (add(a, b) != add(b, a)) return "module addition not commutative";
                if (add(a, b) == zero_) has_neg = true;
                for (Elem c = 0; c < n; ++c)
                    if (add(add(a, b), c) != add(a, add(b, c))) return "module addition not associative";
            }
            if (!has_neg) return "module element without additive inverse";
            if (act(r.one(), a) != a) return "action is not unital";
        }
        for (Elem s = 0; s < rn; ++s) {
            for (Elem t = 0; t < rn; ++t) {
                for (Elem m = 0; m < n; ++m) {
                    if (act(r.add(s, t), m) != add(act(s, m), act(t, m)))
                        return "action not additive in the ring argument at " + r.name(s) + "," + r.name(t);
                    if (act(r.mul(s, t), m) != act(s, act(t, m))) return "action not associative";
                }
            }
            for (Elem m = 0; m < n; ++m)
                for (Elem m2 = 0; m2 < n; ++m2)
                    if (act(s, add(m, m2)) != add(act(s, m), act(s, m2)))
                        return "action not additive in the module argument";
        }
        return std::nullopt;
    }

private:
    RingPtr base_;
    std::size_t order_;
    std::vector<Elem> add_;
    std::vector<Elem> act_;
    Elem zero_;
    std::string label_;
    std::vector<std::string> names_;
};

}  // namespace philab
