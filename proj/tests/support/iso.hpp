#pragma once

// Ring isomorphism testing for small finite rings: cheap invariant vector
// first, then a backtracking search for an explicit isomorphism.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "philab/idealcalc/lattice.hpp"

namespace philab::testsupport {

struct RingInvariants {
    std::size_t order;
    std::size_t units;
    std::size_t nilpotents;
    std::size_t ideals;
    bool operator==(const RingInvariants&) const = default;
};

inline RingInvariants invariants(const RingPtr& r) {
    return {r->order(), r->units().count(), r->nilpotents().count(), enumerate_ideals(r).size()};
}

namespace detail {

inline std::size_t additive_order(const FiniteRing& r, Elem a) {
    std::size_t k = 1;
    for (Elem x = a; x != r.zero(); x = r.add(x, a)) ++k;
    return k;
}

struct ElementProfile {
    std::size_t additive_order;
    std::size_t nil_index;  // 0 when not nilpotent
    bool unit;
    bool operator==(const ElementProfile&) const = default;
};

inline ElementProfile profile(const FiniteRing& r, Elem a) {
    return {additive_order(r, a), r.nilpotency_index(a).value_or(0), r.is_unit(a)};
}

}  // namespace detail

/// Returns an explicit isomorphism R → S (as an index map) if one exists.
inline std::optional<std::vector<Elem>> find_isomorphism(const RingPtr& r, const RingPtr& s) {
    if (!(invariants(r) == invariants(s))) return std::nullopt;
    const std::size_t n = r->order();
    constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<Elem> map(n, kUnset);
    std::vector<bool> used(n, false);
    std::vector<detail::ElementProfile> pr(n), ps(n);
    for (Elem a = 0; a < n; ++a) {
        pr[a] = detail::profile(*r, a);
        ps[a] = detail::profile(*s, a);
    }
    auto consistent = [&](Elem a) {
        for (Elem b = 0; b < n; ++b) {
            if (map[b] == kUnset) continue;
            const Elem sum = r->add(a, b), prod = r->mul(a, b);
            if (map[sum] != kUnset && map[sum] != s->add(map[a], map[b])) return false;
            if (map[prod] != kUnset && map[prod] != s->mul(map[a], map[b])) return false;
        }
        return true;
    };
    auto assign = [&](auto&& self, Elem a) -> bool {
        if (a == n) return true;
        if (map[a] != kUnset) return self(self, a + 1);
        for (Elem t = 0; t < n; ++t) {
            if (used[t] || !(pr[a] == ps[t])) continue;
            map[a] = t;
            used[t] = true;
            if (consistent(a) && self(self, a + 1)) return true;
            map[a] = kUnset;
            used[t] = false;
        }
        return false;
    };
    map[r->zero()] = s->zero();
    used[s->zero()] = true;
    map[r->one()] = s->one();
    used[s->one()] = true;
    if (!consistent(r->one()) || !assign(assign, 0)) return std::nullopt;
    return map;
}

inline bool isomorphic(const RingPtr& r, const RingPtr& s) { return find_isomorphism(r, s).has_value(); }

}  // namespace philab::testsupport
