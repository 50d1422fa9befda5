#pragma once

// One row of a verification run: a claim identifier, the value the claim
// predicts (absent for measurements that are merely reported), and the value
// the library actually computed.  Status is derived, never set by hand.

#include <optional>
#include <string>
#include <utility>

namespace fixsub {

enum class ClaimStatus { pass, fail, report_only };

inline const char* status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::report_only: return "report-only";
    }
    return "?";
}

struct VerificationResult {
    std::string claim_id;
    std::optional<std::string> expected;  // absent: row is informational only
    std::string computed;
    ClaimStatus status = ClaimStatus::report_only;
    long runtime_ms = 0;
    std::string note;  // the claim being tested, quoted in text output on failure
};

inline VerificationResult make_result(std::string claim_id,
                                      std::optional<std::string> expected,
                                      std::string computed, long runtime_ms = 0) {
    VerificationResult r;
    r.claim_id = std::move(claim_id);
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.status = !r.expected                 ? ClaimStatus::report_only
               : *r.expected == r.computed ? ClaimStatus::pass
                                           : ClaimStatus::fail;
    r.runtime_ms = runtime_ms;
    return r;
}

}  // namespace fixsub
