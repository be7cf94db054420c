#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "philab/finring/construct.hpp"
#include "philab/idealcalc/ideal.hpp"

namespace philab {

inline constexpr std::size_t kDefaultIdealBudget = 4096;

namespace detail {
struct IdealCache {
    std::vector<ElementSet> ideals;
};
}  // namespace detail

/// Every ideal of R, ordered by (size, sorted element list).
///
/// Found by breadth-first generator extension from {0}: each discovered
/// ideal I is extended by every principal ideal (x), x ∉ I. The full list is
/// memoized on the ring; a budget smaller than the cached count still fails.
inline std::vector<FiniteIdeal> enumerate_ideals(const RingPtr& r, std::size_t budget = kDefaultIdealBudget) {
    auto& cache = r->cache();
    std::shared_ptr<const detail::IdealCache> cached;
    {
        std::lock_guard lock(cache.mutex);
        cached = std::static_pointer_cast<const detail::IdealCache>(cache.ideals);
    }
    if (!cached) {
        std::vector<ElementSet> principals;
        principals.reserve(r->order());
        for (Elem x = 0; x < r->order(); ++x) principals.push_back(principal(r, x).members());

        std::unordered_set<ElementSet, ElementSetHash> seen;
        std::vector<ElementSet> found;
        const ElementSet zero = zero_ideal(r).members();
        seen.insert(zero);
        found.push_back(zero);
        for (std::size_t head = 0; head < found.size(); ++head) {
            const ElementSet current = found[head];
            const auto members = current.elements();
            for (Elem x = 0; x < r->order(); ++x) {
                if (current.contains(x)) continue;
                ElementSet s(r->order());
                const auto px = principals[x].elements();
                for (Elem a : members)
                    for (Elem b : px) s.insert(r->add(a, b));
                if (seen.insert(s).second) {
                    found.push_back(std::move(s));
                    if (found.size() > budget)
                        throw Error(ErrorCode::BudgetExceeded,
                                    "more than " + std::to_string(budget) + " ideals in " + r->label());
                }
            }
        }
        std::sort(found.begin(), found.end());
        auto fresh = std::make_shared<detail::IdealCache>();
        fresh->ideals = std::move(found);
        std::lock_guard lock(cache.mutex);
        if (!cache.ideals) cache.ideals = fresh;
        cached = std::static_pointer_cast<const detail::IdealCache>(cache.ideals);
    }
    if (cached->ideals.size() > budget)
        throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " ideals in " + r->label());
    std::vector<FiniteIdeal> out;
    out.reserve(cached->ideals.size());
    for (const auto& s : cached->ideals) out.emplace_back(r, s);
    return out;
}

/// A yes/no answer with a human-readable witness for the deciding case.
struct Decision {
    bool holds = false;
    std::string witness;
};

inline Decision is_prime(const FiniteIdeal& p) {
    const auto& r = *p.ring();
    if (p.is_whole()) return {false, "unit ideal"};
    for (Elem x = 0; x < r.order(); ++x) {
        if (p.contains(x)) continue;
        for (Elem y = x; y < r.order(); ++y) {
            if (p.contains(y)) continue;
            if (p.contains(r.mul(x, y)))
                return {false, r.name(x) + "*" + r.name(y) + "=" + r.name(r.mul(x, y)) + " with " + r.name(x) +
                                   "," + r.name(y) + " outside"};
        }
    }
    return {true, ""};
}

inline Decision is_maximal(const FiniteIdeal& m) {
    const auto& r = m.ring();
    if (m.is_whole()) return {false, "unit ideal"};
    for (Elem x = 0; x < r->order(); ++x) {
        if (m.contains(x)) continue;
        const auto bigger = ideal_sum(m, principal(r, x));
        if (!bigger.is_whole()) return {false, "contained in proper ideal " + bigger.to_string()};
    }
    return {true, ""};
}

/// xy ∈ q ⇒ x ∈ q or y^k ∈ q for some k.
inline Decision is_primary(const FiniteIdeal& q) {
    const auto& r = *q.ring();
    if (q.is_whole()) return {false, "unit ideal"};
    const auto rad = radical_set(q);
    for (Elem x = 0; x < r.order(); ++x) {
        if (q.contains(x)) continue;
        for (Elem y = 0; y < r.order(); ++y) {
            if (rad.contains(y)) continue;
            if (q.contains(r.mul(x, y)))
                return {false, r.name(x) + "*" + r.name(y) + " in q, " + r.name(x) + " not in q, no power of " +
                                   r.name(y) + " in q"};
        }
    }
    return {true, ""};
}

/// Proper and not the intersection of two strictly larger ideals; decided
/// against the full ideal list.
inline Decision is_irreducible(const FiniteIdeal& q, std::size_t budget = kDefaultIdealBudget) {
    if (q.is_whole()) return {false, "unit ideal"};
    const auto all = enumerate_ideals(q.ring(), budget);
    std::vector<const FiniteIdeal*> above;
    for (const auto& i : all)
        if (q.is_subset_of(i) && !(i == q)) above.push_back(&i);
    for (std::size_t a = 0; a < above.size(); ++a)
        for (std::size_t b = a; b < above.size(); ++b)
            if ((above[a]->members() & above[b]->members()) == q.members())
                return {false, above[a]->to_string() + " ∩ " + above[b]->to_string()};
    return {true, ""};
}

/// Comparable under inclusion to every ideal of R.
inline Decision is_divided(const FiniteIdeal& p, std::size_t budget = kDefaultIdealBudget) {
    for (const auto& i : enumerate_ideals(p.ring(), budget))
        if (!p.is_subset_of(i) && !i.is_subset_of(p)) return {false, "incomparable with " + i.to_string()};
    return {true, ""};
}

inline Decision is_nonnil(const FiniteIdeal& i) {
    const auto& r = *i.ring();
    for (Elem x : i.members().elements())
        if (!r.is_nilpotent(x)) return {true, r.name(x) + " is not nilpotent"};
    return {false, ""};
}

struct IdealPredicates {
    Decision is_prime;
    Decision is_maximal;
    Decision is_primary;
    Decision is_irreducible;
    Decision is_divided;
    Decision is_nonnil;
};

inline IdealPredicates predicates(const FiniteIdeal& i, std::size_t budget = kDefaultIdealBudget) {
    return IdealPredicates{is_prime(i),          is_maximal(i),         is_primary(i),
                           is_irreducible(i, budget), is_divided(i, budget), is_nonnil(i)};
}

inline std::vector<FiniteIdeal> prime_ideals(const RingPtr& r, std::size_t budget = kDefaultIdealBudget) {
    std::vector<FiniteIdeal> out;
    for (auto& i : enumerate_ideals(r, budget))
        if (is_prime(i).holds) out.push_back(std::move(i));
    return out;
}

inline std::vector<FiniteIdeal> maximal_ideals(const RingPtr& r, std::size_t budget = kDefaultIdealBudget) {
    std::vector<FiniteIdeal> out;
    for (auto& i : enumerate_ideals(r, budget))
        if (is_maximal(i).holds) out.push_back(std::move(i));
    return out;
}

/// I_P = {r : s·r = 0 for some s ∉ P}.
inline FiniteIdeal localization_kernel(const FiniteIdeal& p) {
    const auto& r = *p.ring();
    ElementSet torsion(r.order());
    for (Elem x = 0; x < r.order(); ++x)
        for (Elem s = 0; s < r.order(); ++s)
            if (!p.contains(s) && r.mul(s, x) == r.zero()) {
                torsion.insert(x);
                break;
            }
    return FiniteIdeal(p.ring(), torsion);
}

/// The localization R_P realized as R/I_P.
///
/// Both halves of the universal property are checked on every call: the
/// projection kernel is exactly I_P and every s ∉ P becomes a unit.
inline QuotientRing localize_at(const FiniteIdeal& p) {
    const auto& rp = p.ring();
    const auto& r = *rp;
    if (!is_prime(p).holds) throw Error(ErrorCode::NotPrime, p.to_string() + " is not prime in " + r.label());
    const ElementSet torsion = localization_kernel(p).members();
    auto q = make_quotient(rp, torsion, "loc[" + p.to_string() + "]");
    const auto zero = q.ring->zero();
    for (Elem x = 0; x < r.order(); ++x) {
        if ((q.projection[x] == zero) != torsion.contains(x))
            throw Error(ErrorCode::InternalInconsistency, "localization kernel differs from the S-torsion ideal");
        if (!p.contains(x) && !q.ring->is_unit(q.projection[x]))
            throw Error(ErrorCode::InternalInconsistency, "element outside P did not become a unit");
    }
    return q;
}

}  // namespace philab
