#pragma once

#include <string>

#include "philab/idealcalc/lattice.hpp"

namespace philab {

/// Nil(R) is a divided prime: prime by pair scan, divided by comparison with
/// every ideal.
inline Decision nil_is_divided_prime(const RingPtr& r, std::size_t budget = kDefaultIdealBudget) {
    const auto nil = nilradical(r);
    if (auto prime = is_prime(nil); !prime.holds) return {false, "Nil(R) not prime: " + prime.witness};
    if (auto divided = is_divided(nil, budget); !divided.holds) return {false, "Nil(R) not divided: " + divided.witness};
    return {true, ""};
}

/// Kernel of φ: R → R_{Nil(R)}, i.e. {x : s·x = 0 for some s ∉ Nil(R)}.
inline FiniteIdeal phi_kernel(const RingPtr& r) {
    ElementSet k(r->order());
    const auto& nil = r->nilpotents();
    for (Elem x = 0; x < r->order(); ++x)
        for (Elem s = 0; s < r->order(); ++s)
            if (!nil.contains(s) && r->mul(s, x) == r->zero()) {
                k.insert(x);
                break;
            }
    return FiniteIdeal(r, k);
}

/// φ(R) ≅ R/ker(φ) together with the quotient map.
inline QuotientRing phi_image(const RingPtr& r, std::size_t budget = kDefaultIdealBudget) {
    if (auto phi = nil_is_divided_prime(r, budget); !phi.holds)
        throw Error(ErrorCode::PhiRingRequired, r->label() + " is not a φ-ring (" + phi.witness + ")");
    return make_quotient(r, phi_kernel(r).members(), "phi");
}

}  // namespace philab
