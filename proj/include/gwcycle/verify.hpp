// The verification registry: every numeric claim of the worked examples,
// grouped by acceptance criterion, with frozen expected values.  Shared by
// the CLI `verify` subcommand and the acceptance suite.

#pragma once

#include <string>
#include <vector>

namespace gw {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string expected;
    std::string got;
};

std::vector<CheckResult> run_verification();

std::string verification_report_json(const std::vector<CheckResult>& results);

} // namespace gw
