#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "philab/finring/module.hpp"
#include "philab/finring/ring.hpp"

namespace philab {

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Compound labels get parenthesized when nested so the printed form parses back.
inline std::string nested_label(const std::string& label) {
    return label.find('|') == std::string::npos ? label : "(" + label + ")";
}

inline void check_cap(std::size_t order, std::size_t cap) {
    if (order > cap)
        throw Error(ErrorCode::TooLarge,
                    "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

inline RingPtr finish(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero, Elem one,
                      std::string label, std::vector<std::string> names) {
    auto ring = std::make_shared<const FiniteRing>(n, std::move(add), std::move(mul), zero, one, std::move(label),
                                                   std::move(names));
    if (n <= kVerifyOrderCap) {
        if (auto failure = ring->axiom_failure())
            throw Error(ErrorCode::InternalInconsistency, "constructed table is not a ring: " + *failure);
    }
    return ring;
}

inline std::string variable_name(std::size_t i, std::size_t count) {
    static const char* const kShort[] = {"x", "y", "z", "u", "v", "w"};
    if (count <= 6) return kShort[i];
    return "x" + std::to_string(i + 1);
}

}  // namespace detail

/// ℤ/nℤ with elements named by their residues.
inline RingPtr make_zn(std::int64_t n, std::size_t cap = kDefaultOrderCap) {
    if (n <= 1) throw Error(ErrorCode::InvalidOrder, "Zn requires n >= 2 (got " + std::to_string(n) + ")");
    const auto order = static_cast<std::size_t>(n);
    detail::check_cap(order, cap);
    std::vector<Elem> add(order * order), mul(order * order);
    std::vector<std::string> names(order);
    for (std::size_t a = 0; a < order; ++a) {
        names[a] = std::to_string(a);
        for (std::size_t b = 0; b < order; ++b) {
            add[a * order + b] = static_cast<Elem>((a + b) % order);
            mul[a * order + b] = static_cast<Elem>((a * b) % order);
        }
    }
    return detail::finish(order, std::move(add), std::move(mul), 0, 1, "Zn:" + std::to_string(n), std::move(names));
}

/// F_p[x_1..x_k]/(x_1^e_1, ..., x_k^e_k).
///
/// An element is a coefficient vector over the monomials x^a with
/// 0 ≤ a_i < e_i; its index is that vector read as a base-p number, with the
/// monomials in mixed-radix order (first variable least significant). So
/// for trunc:2:2,2 the indices of 1, x, y, xy are 1, 2, 4, 8.
inline RingPtr make_truncated_poly(std::int64_t p, const std::vector<std::int64_t>& exps,
                                   std::size_t cap = kDefaultOrderCap) {
    if (!detail::is_prime(p)) throw Error(ErrorCode::InvalidModulus, std::to_string(p) + " is not prime");
    if (exps.empty()) throw Error(ErrorCode::InvalidOrder, "at least one variable is required");
    std::size_t monomials = 1;
    for (auto e : exps) {
        if (e < 1) throw Error(ErrorCode::InvalidOrder, "truncation exponents must be >= 1");
        monomials *= static_cast<std::size_t>(e);
        if (monomials > 64) throw Error(ErrorCode::TooLarge, "too many monomials");
    }
    std::size_t order = 1;
    for (std::size_t i = 0; i < monomials; ++i) {
        order *= static_cast<std::size_t>(p);
        detail::check_cap(order, cap);
    }
    const std::size_t k = exps.size();

    // exponent vectors of each monomial, and the truncated monomial product
    std::vector<std::vector<std::int64_t>> mono(monomials, std::vector<std::int64_t>(k));
    for (std::size_t m = 0; m < monomials; ++m) {
        std::size_t rest = m;
        for (std::size_t i = 0; i < k; ++i) {
            mono[m][i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(exps[i]));
            rest /= static_cast<std::size_t>(exps[i]);
        }
    }
    auto index_of = [&](const std::vector<std::int64_t>& ex) {
        std::size_t idx = 0, radix = 1;
        for (std::size_t i = 0; i < k; ++i) {
            idx += static_cast<std::size_t>(ex[i]) * radix;
            radix *= static_cast<std::size_t>(exps[i]);
        }
        return idx;
    };
    constexpr std::size_t kVanishes = static_cast<std::size_t>(-1);
    std::vector<std::size_t> mono_mul(monomials * monomials, kVanishes);
    for (std::size_t a = 0; a < monomials; ++a) {
        for (std::size_t b = 0; b < monomials; ++b) {
            std::vector<std::int64_t> ex(k);
            bool vanishes = false;
            for (std::size_t i = 0; i < k; ++i) {
                ex[i] = mono[a][i] + mono[b][i];
                if (ex[i] >= exps[i]) vanishes = true;
            }
            if (!vanishes) mono_mul[a * monomials + b] = index_of(ex);
        }
    }

    const auto up = static_cast<std::size_t>(p);
    auto digits = [&](std::size_t x) {
        std::vector<std::size_t> d(monomials);
        for (std::size_t i = 0; i < monomials; ++i) {
            d[i] = x % up;
            x /= up;
        }
        return d;
    };
    auto encode = [&](const std::vector<std::size_t>& d) {
        std::size_t x = 0;
        for (std::size_t i = monomials; i-- > 0;) x = x * up + d[i];
        return x;
    };

    std::vector<std::vector<std::size_t>> dig(order);
    for (std::size_t x = 0; x < order; ++x) dig[x] = digits(x);

    std::vector<Elem> add(order * order), mul(order * order);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            std::vector<std::size_t> s(monomials), t(monomials, 0);
            for (std::size_t i = 0; i < monomials; ++i) s[i] = (dig[a][i] + dig[b][i]) % up;
            for (std::size_t i = 0; i < monomials; ++i) {
                if (dig[a][i] == 0) continue;
                for (std::size_t j = 0; j < monomials; ++j) {
                    const auto m = mono_mul[i * monomials + j];
                    if (m == kVanishes || dig[b][j] == 0) continue;
                    t[m] = (t[m] + dig[a][i] * dig[b][j]) % up;
                }
            }
            add[a * order + b] = static_cast<Elem>(encode(s));
            mul[a * order + b] = static_cast<Elem>(encode(t));
        }
    }

    std::vector<std::string> mono_names(monomials);
    for (std::size_t m = 0; m < monomials; ++m) {
        std::string s;
        for (std::size_t i = 0; i < k; ++i) {
            if (mono[m][i] == 0) continue;
            if (!s.empty()) s += "*";
            s += detail::variable_name(i, k);
            if (mono[m][i] > 1) s += "^" + std::to_string(mono[m][i]);
        }
        mono_names[m] = s.empty() ? "1" : s;
    }
    std::vector<std::string> names(order);
    for (std::size_t x = 0; x < order; ++x) {
        std::string s;
        for (std::size_t i = 0; i < monomials; ++i) {
            const auto c = dig[x][i];
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) s += std::to_string(c);
            else s += (c == 1 ? "" : std::to_string(c) + "*") + mono_names[i];
        }
        names[x] = s.empty() ? "0" : s;
    }

    std::string label = "trunc:" + std::to_string(p) + ":";
    for (std::size_t i = 0; i < k; ++i) label += (i ? "," : "") + std::to_string(exps[i]);
    return detail::finish(order, std::move(add), std::move(mul), 0, 1, std::move(label), std::move(names));
}

/// R × S with componentwise operations; element (r, s) has index r + |R|·s.
inline RingPtr make_product(const RingPtr& r, const RingPtr& s, std::size_t cap = kDefaultOrderCap) {
    const std::size_t n = r->order() * s->order();
    detail::check_cap(n, cap);
    const std::size_t rn = r->order();
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto a1 = static_cast<Elem>(a % rn), a2 = static_cast<Elem>(a / rn);
        names[a] = "(" + r->name(a1) + "," + s->name(a2) + ")";
        for (std::size_t b = 0; b < n; ++b) {
            const auto b1 = static_cast<Elem>(b % rn), b2 = static_cast<Elem>(b / rn);
            add[a * n + b] = static_cast<Elem>(r->add(a1, b1) + rn * s->add(a2, b2));
            mul[a * n + b] = static_cast<Elem>(r->mul(a1, b1) + rn * s->mul(a2, b2));
        }
    }
    const auto zero = static_cast<Elem>(r->zero() + rn * s->zero());
    const auto one = static_cast<Elem>(r->one() + rn * s->one());
    return detail::finish(n, std::move(add), std::move(mul), zero, one,
                          "prod:" + detail::nested_label(r->label()) + "|" + detail::nested_label(s->label()),
                          std::move(names));
}

/// A ⋉ M with (r1, m1)(r2, m2) = (r1 r2, r1 m2 + r2 m1); element (a, m) has
/// index a + |A|·m.
inline RingPtr make_trivial_ext(const RingPtr& a, const FiniteModule& m, std::size_t cap = kDefaultOrderCap) {
    if (m.base().get() != a.get() && m.base()->label() != a->label())
        throw Error(ErrorCode::InvalidModule, "module is over a different ring");
    if (auto failure = m.axiom_failure()) throw Error(ErrorCode::InvalidModule, *failure);
    const std::size_t an = a->order();
    const std::size_t n = an * m.order();
    detail::check_cap(n, cap);
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto r1 = static_cast<Elem>(x % an), m1 = static_cast<Elem>(x / an);
        names[x] = "(" + a->name(r1) + "," + m.name(m1) + ")";
        for (std::size_t y = 0; y < n; ++y) {
            const auto r2 = static_cast<Elem>(y % an), m2 = static_cast<Elem>(y / an);
            add[x * n + y] = static_cast<Elem>(a->add(r1, r2) + an * m.add(m1, m2));
            mul[x * n + y] = static_cast<Elem>(a->mul(r1, r2) + an * m.add(m.act(r1, m2), m.act(r2, m1)));
        }
    }
    const auto zero = static_cast<Elem>(a->zero() + an * m.zero());
    const auto one = static_cast<Elem>(a->one() + an * m.zero());
    return detail::finish(n, std::move(add), std::move(mul), zero, one,
                          "triv:" + detail::nested_label(a->label()) + "|" + m.label(), std::move(names));
}

/// The ring acting on itself.
inline FiniteModule make_self_module(const RingPtr& a) {
    const std::size_t n = a->order();
    std::vector<Elem> add(n * n), act(n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            add[x * n + y] = a->add(x, y);
            act[x * n + y] = a->mul(x, y);
        }
    return FiniteModule(a, n, std::move(add), std::move(act), a->zero(), "self", a->names());
}

/// The cyclic group ℤ/k with action r·m = (r·m mod k); only meaningful when
/// the base is some ℤ/n. A base for which this is not an action is
/// reported as InvalidModule.
inline FiniteModule make_cyclic_module(const RingPtr& a, std::int64_t k) {
    if (k < 1) throw Error(ErrorCode::InvalidModule, "cyclic module order must be >= 1");
    if (a->label().rfind("Zn:", 0) != 0)
        throw Error(ErrorCode::InvalidModule, "cyclic module spec Zn:k needs a Zn base ring; use quot:<gens>");
    const auto n = static_cast<std::size_t>(k);
    const std::size_t rn = a->order();
    std::vector<Elem> add(n * n), act(rn * n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        names[x] = std::to_string(x);
        for (std::size_t y = 0; y < n; ++y) add[x * n + y] = static_cast<Elem>((x + y) % n);
    }
    for (std::size_t r = 0; r < rn; ++r)
        for (std::size_t m = 0; m < n; ++m) act[r * n + m] = static_cast<Elem>((r * m) % n);
    return FiniteModule(a, n, std::move(add), std::move(act), 0, "Zn:" + std::to_string(k), std::move(names));
}

/// Coset representatives of R modulo an additive subgroup: rep[x] is the
/// smallest index in x + I, class_of[x] the index of that coset.
struct CosetTable {
    std::vector<Elem> class_of;
    std::vector<Elem> reps;
};

inline CosetTable coset_table(const FiniteRing& r, const ElementSet& ideal) {
    const auto members = ideal.elements();
    CosetTable t;
    constexpr Elem kUnset = static_cast<Elem>(-1);
    t.class_of.assign(r.order(), kUnset);
    for (Elem x = 0; x < r.order(); ++x) {
        if (t.class_of[x] != kUnset) continue;
        const auto cls = static_cast<Elem>(t.reps.size());
        t.reps.push_back(x);
        for (Elem i : members) t.class_of[r.add(x, i)] = cls;
    }
    return t;
}

/// Quotient module R/I with the induced action.
inline FiniteModule make_quotient_module(const RingPtr& a, const ElementSet& ideal, std::string label) {
    const auto t = coset_table(*a, ideal);
    const std::size_t n = t.reps.size();
    const std::size_t rn = a->order();
    std::vector<Elem> add(n * n), act(rn * n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        names[x] = "[" + a->name(t.reps[x]) + "]";
        for (std::size_t y = 0; y < n; ++y) add[x * n + y] = t.class_of[a->add(t.reps[x], t.reps[y])];
    }
    for (Elem r = 0; r < rn; ++r)
        for (std::size_t m = 0; m < n; ++m) act[r * n + m] = t.class_of[a->mul(r, t.reps[m])];
    return FiniteModule(a, n, std::move(add), std::move(act), t.class_of[a->zero()], std::move(label),
                        std::move(names));
}

/// A ring together with a surjection from its source ring.
struct QuotientRing {
    RingPtr ring;
    std::vector<Elem> projection;  // source element index → quotient element index
};

/// R/I for an ideal I given as a membership bitmap. The ideal must be proper.
inline QuotientRing make_quotient(const RingPtr& r, const ElementSet& ideal, const std::string& tag) {
    if (ideal.contains(r->one())) throw Error(ErrorCode::InvalidOrder, "quotient by the unit ideal is the zero ring");
    const auto t = coset_table(*r, ideal);
    const std::size_t n = t.reps.size();
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        names[x] = "[" + r->name(t.reps[x]) + "]";
        for (std::size_t y = 0; y < n; ++y) {
            add[x * n + y] = t.class_of[r->add(t.reps[x], t.reps[y])];
            mul[x * n + y] = t.class_of[r->mul(t.reps[x], t.reps[y])];
        }
    }
    auto q = detail::finish(n, std::move(add), std::move(mul), t.class_of[r->zero()], t.class_of[r->one()],
                            tag + "(" + r->label() + ")", std::move(names));
    return QuotientRing{std::move(q), t.class_of};
}

}  // namespace philab
