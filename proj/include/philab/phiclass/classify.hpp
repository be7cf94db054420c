#pragma once

#include "philab/phiclass/divided.hpp"
#include "philab/phiclass/finite.hpp"

namespace philab {

inline Verdict is_phi_ring(const AnyRing& r, const ClassifyOptions& opt = {}) {
    if (const auto* f = std::get_if<RingPtr>(&r))
        return detail::from_decision(nil_is_divided_prime(*f, opt.ideal_budget), "exhaustive",
                                     "Nil(R) is a divided prime ideal");
    return divided_is_phi_ring(std::get<DividedExtRing>(r), opt);
}

inline ClassificationReport classify(const AnyRing& r, const ClassifyOptions& opt = {}) {
    if (const auto* f = std::get_if<RingPtr>(&r)) return classify_finite(*f, opt);
    return classify_divided(std::get<DividedExtRing>(r), opt);
}

/// Route map r2..r14 for a φ-ring; throws PhiRingRequired otherwise and
/// InternalInconsistency when two definite routes disagree.
inline std::map<std::string, Verdict> phi_prufer_multiroute(const AnyRing& r, const ClassifyOptions& opt = {}) {
    auto routes = std::holds_alternative<RingPtr>(r) ? finite_phi_prufer_routes(std::get<RingPtr>(r), opt)
                                                     : divided_phi_prufer_routes(std::get<DividedExtRing>(r), opt);
    route_consensus(routes, ring_label(r));
    return routes;
}

}  // namespace philab
