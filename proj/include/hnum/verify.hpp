#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hnum {

struct VerifyOptions {
    int max_d = 6;        // correspondence battery degree bound
    int max_r = 3;        // correspondence battery pair bound
    int decompose_max_d = 6;
    int nonvanish_max_d = 8;
    int family_max_m = 13;
    int family_enum_max_m = 7;
    int threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    long cases = 0;     // individual checks run
    long failures = 0;
    std::string first_failure;
};

// Runs the eight acceptance criteria.  Every individual check emits one
// machine-readable line ("PASS c2 ..." / "FAIL c2 ...") through the sink.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::function<void(const std::string&)>& sink);

} // namespace hnum
