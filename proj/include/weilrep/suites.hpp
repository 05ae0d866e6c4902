#pragma once

#include "weilrep/weil_even.hpp"
#include "weilrep/weil_odd.hpp"

#include <string>
#include <vector>

namespace weilrep {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;  // over budget for the current limits, not a failure
    std::string witness;   // explanation on failure, optional note on success
    double millis = 0;
};

struct SuiteReport {
    std::string scenario;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        bool ran_any = false;
        for (const auto& c : checks) {
            if (c.skipped) continue;
            if (!c.pass) return false;
            ran_any = true;
        }
        return ran_any;
    }
};

/// Thrown by checks whose sweep would exceed the configured budget; reported
/// as SKIP, never as FAIL.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteOptions {
    int q = 3;
    int m = 1;
    int d = 1;
    bool exhaustive = false;
    long long char_budget = 100000;   // elements in one full character sum
    long long enum_budget = 1000000;  // elements in one group enumeration
    std::vector<int> field_modulus;   // optional override for F_q
};

struct SuiteInfo {
    std::string name;
    std::string parameter_case;  // "odd" or "even"
    std::string description;
};

const std::vector<SuiteInfo>& list_suites();

/// Runs the named suites; unknown names throw std::invalid_argument.
SuiteReport run_suites(const std::string& parameter_case, const std::vector<std::string>& names,
                       const SuiteOptions& opts);

}  // namespace weilrep
