#pragma once

#include <string>
#include <vector>

#include "twobridge/dilog.hpp"

namespace twobridge {

struct SelftestOptions {
    // Injected into every numeric check; lets a harness verify that the
    // suite actually fails when the dilogarithm engine is degraded.
    DilogConfig dilog{};
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The acceptance checks, fixed tolerances. Order is stable.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt = {});

// "PASS name  detail" lines plus a summary; returns true iff all passed.
bool print_selftest(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace twobridge
