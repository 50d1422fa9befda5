#pragma once

// JSON views of the report structs.  The field names below are the wire
// format consumed by downstream tooling; treat them as frozen.

#include <string>

#include <json.hpp>

#include "fixsub/fixing.hpp"
#include "fixsub/verify_result.hpp"

namespace fixsub {

inline void to_json(nlohmann::json& j, const FixingReport& r) {
    j = nlohmann::json{
        {"graph", r.label},
        {"s", r.s},
        {"s0", r.s0},
        {"x", r.x},
        {"autG", r.aut_g},
        {"autU", r.aut_u},
        {"stab", r.stab},
        {"fixing", r.fixing},
        {"strongFixing", r.strong_fixing},
    };
}

inline void to_json(nlohmann::json& j, const HamOrbitReport::Orbit& o) {
    j = nlohmann::json{{"size", o.size}, {"stab", o.stab}};
    if (o.signature)
        j["signature"] = *o.signature;
    else
        j["signature"] = nullptr;
}

inline void to_json(nlohmann::json& j, const HamOrbitReport& r) {
    j = nlohmann::json{
        {"cycles", r.cycles},
        {"orbits", r.orbits},
        {"fHam", r.f_ham},
        {"fStarHam", r.f_star_ham},
    };
}

inline void to_json(nlohmann::json& j, const VerificationResult& r) {
    j = nlohmann::json{
        {"claim", r.claim_id},
        {"expected", r.expected ? *r.expected : "unspecified"},
        {"computed", r.computed},
        {"status", status_name(r.status)},
        {"runtimeMs", r.runtime_ms},
    };
}

}  // namespace fixsub
