#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "philab/finring/ring.hpp"

namespace philab {

/// An ideal of a finite ring, stored as a membership bitmap over the ring's
/// element indices.
class FiniteIdeal {
public:
    FiniteIdeal(RingPtr ring, ElementSet members, std::optional<std::vector<Elem>> generators = std::nullopt)
        : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {}

    const RingPtr& ring() const { return ring_; }
    const ElementSet& members() const { return members_; }
    const std::optional<std::vector<Elem>>& generators() const { return generators_; }

    bool contains(Elem x) const { return members_.contains(x); }
    std::size_t size() const { return members_.count(); }
    bool is_zero() const { return size() == 1; }
    bool is_whole() const { return members_.contains(ring_->one()); }
    bool is_proper() const { return !is_whole(); }
    bool is_subset_of(const FiniteIdeal& o) const { return members_.is_subset_of(o.members_); }

    /// Equality compares the element sets; generator lists are informational.
    bool operator==(const FiniteIdeal& o) const { return ring_.get() == o.ring_.get() && members_ == o.members_; }

    std::string to_string() const {
        if (generators_) {
            std::string s = "span{";
            for (std::size_t i = 0; i < generators_->size(); ++i) s += (i ? "," : "") + ring_->name((*generators_)[i]);
            return s + "}";
        }
        std::string s = "{";
        bool first = true;
        for (Elem x : members_.elements()) {
            s += (first ? "" : ",") + ring_->name(x);
            first = false;
        }
        return s + "}";
    }

private:
    RingPtr ring_;
    ElementSet members_;
    std::optional<std::vector<Elem>> generators_;
};

namespace detail {

inline void require_same_ring(const FiniteIdeal& a, const FiniteIdeal& b) {
    if (a.ring().get() != b.ring().get()) throw Error(ErrorCode::MixedRings, "ideals belong to different rings");
}

/// Additive closure of {0} ∪ seeds, where seeds is already closed under
/// multiplication by ring elements.
inline ElementSet additive_closure(const FiniteRing& r, const std::vector<Elem>& seeds) {
    ElementSet s(r.order());
    s.insert(r.zero());
    std::vector<Elem> frontier{r.zero()};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem x : frontier)
            for (Elem g : seeds) {
                const Elem y = r.add(x, g);
                if (!s.contains(y)) {
                    s.insert(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return s;
}

}  // namespace detail

/// Least ideal containing the generators.
inline FiniteIdeal span(const RingPtr& r, const std::vector<Elem>& gens) {
    ElementSet multiples(r->order());
    for (Elem g : gens)
        for (Elem x = 0; x < r->order(); ++x) multiples.insert(r->mul(x, g));
    return FiniteIdeal(r, detail::additive_closure(*r, multiples.elements()), gens);
}

inline FiniteIdeal zero_ideal(const RingPtr& r) { return span(r, {}); }
inline FiniteIdeal unit_ideal(const RingPtr& r) { return FiniteIdeal(r, ElementSet::full(r->order())); }

inline FiniteIdeal principal(const RingPtr& r, Elem g) { return span(r, {g}); }

inline FiniteIdeal ideal_sum(const FiniteIdeal& a, const FiniteIdeal& b) {
    detail::require_same_ring(a, b);
    const auto& r = *a.ring();
    ElementSet s(r.order());
    const auto bs = b.members().elements();
    for (Elem x : a.members().elements())
        for (Elem y : bs) s.insert(r.add(x, y));
    return FiniteIdeal(a.ring(), std::move(s));
}

inline FiniteIdeal ideal_intersection(const FiniteIdeal& a, const FiniteIdeal& b) {
    detail::require_same_ring(a, b);
    return FiniteIdeal(a.ring(), a.members() & b.members());
}

inline FiniteIdeal ideal_product(const FiniteIdeal& a, const FiniteIdeal& b) {
    detail::require_same_ring(a, b);
    const auto& r = *a.ring();
    ElementSet products(r.order());
    const auto bs = b.members().elements();
    for (Elem x : a.members().elements())
        for (Elem y : bs) products.insert(r.mul(x, y));
    return FiniteIdeal(a.ring(), detail::additive_closure(r, products.elements()));
}

/// (I : J) = {x ∈ R : xJ ⊆ I}.
inline FiniteIdeal residual(const FiniteIdeal& i, const FiniteIdeal& j) {
    detail::require_same_ring(i, j);
    const auto& r = *i.ring();
    ElementSet out(r.order());
    const auto js = j.members().elements();
    for (Elem x = 0; x < r.order(); ++x) {
        bool ok = true;
        for (Elem y : js)
            if (!i.contains(r.mul(x, y))) {
                ok = false;
                break;
            }
        if (ok) out.insert(x);
    }
    return FiniteIdeal(i.ring(), std::move(out));
}

struct LatticeOps {
    FiniteIdeal sum;
    FiniteIdeal intersection;
    FiniteIdeal product;
};

inline LatticeOps lattice_ops(const FiniteIdeal& a, const FiniteIdeal& b) {
    return LatticeOps{ideal_sum(a, b), ideal_intersection(a, b), ideal_product(a, b)};
}

/// Nil(R) as an ideal.
inline FiniteIdeal nilradical(const RingPtr& r) { return FiniteIdeal(r, r->nilpotents()); }

/// {x : x^k ∈ q for some k}, by elementwise power scan.
inline ElementSet radical_set(const FiniteIdeal& q) {
    const auto& r = *q.ring();
    ElementSet out(r.order());
    for (Elem x = 0; x < r.order(); ++x) {
        Elem p = x;
        for (std::size_t k = 1; k <= r.order(); ++k) {
            if (q.contains(p)) {
                out.insert(x);
                break;
            }
            p = r.mul(p, x);
        }
    }
    return out;
}

inline FiniteIdeal radical(const FiniteIdeal& q) { return FiniteIdeal(q.ring(), radical_set(q)); }

/// Whether the bitmap is closed under addition and ring multiplication and
/// contains zero.
inline bool is_ideal_set(const FiniteRing& r, const ElementSet& s) {
    if (!s.contains(r.zero())) return false;
    const auto xs = s.elements();
    for (Elem x : xs) {
        for (Elem y : xs)
            if (!s.contains(r.add(x, y))) return false;
        for (Elem a = 0; a < r.order(); ++a)
            if (!s.contains(r.mul(a, x))) return false;
    }
    return true;
}

}  // namespace philab
