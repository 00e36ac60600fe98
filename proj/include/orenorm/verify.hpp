#pragma once

// Acceptance checks (numbered 1–9) and the suites the CLI `verify` command runs.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace orenorm {

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double time_limit = 0;  // 0: none
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    /// Overrides the per-criterion sample count when nonzero.
    int trials = 0;
};

/// Runs acceptance criterion `number` (1–9).
CheckResult run_criterion(int number, const VerifyOptions& opt);

/// sigma-terms, sigma-factor, delta-identities, csa, oracle-agreement, golden, all.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opt);
std::vector<std::string> suite_names();

/// "PASS criterion 1 (term formula): … [0.41 s]"; the timing is left out when `with_time` is false.
std::string format_check(const CheckResult& c, bool with_time = true);

}  // namespace orenorm
