#pragma once

#include <string>
#include <vector>

namespace maxwalk::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The nine acceptance checks, k in 1..9. Each runs the full computation
// and reports measured numbers in the detail string.
CheckResult criterion(int k);

// Named suites: "oracle", "mellin", "theta", "scaling", "all".
std::vector<CheckResult> run_suite(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace maxwalk::verify
