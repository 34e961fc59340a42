#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgm {

// Outcome of one randomized property: how many trials ran, how many failed,
// and a description of the first failure.
struct CheckResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    // Multiplies the default trial counts; 1.0 gives the full-strength run.
    double scale = 1.0;
};

std::vector<std::string> suite_names();  // linalg, matroid, siggraph, equivalence

// Throws Error for an unknown suite name; "all" runs every suite in order.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

// Individual checks, also used by the acceptance run.
CheckResult check_circuits_match_incidence(std::uint64_t seed, std::size_t trials);
CheckResult check_enumeration_matches_oracle(std::uint64_t seed, std::size_t trials);
CheckResult check_resign_preserves_circuits(std::uint64_t seed, std::size_t trials);
CheckResult check_cylinder_flips(std::uint64_t seed, std::size_t trials, std::size_t degenerate_trials);
CheckResult check_normalization_canonical(std::uint64_t seed, std::size_t trials);
CheckResult check_restricted_normalization(std::uint64_t seed, std::size_t trials);

// "name: pass (n trials)" or "name: FAIL k/n: detail", one line per check.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace sgm
