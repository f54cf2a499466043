#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prefatt {

// One statistic compared against one bound. `criterion` groups checks for
// the acceptance roll-up; `seed` is the master seed the check was run under.
struct CheckResult {
    std::string name;
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    int criterion = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool pass() const;
};

struct VerifyOptions {
    std::uint64_t master_seed = 987654321;
    int threads = 1;
    int ell_filter = 0;  // rates suite: 0 = both, else this ell only
    int grid_max = 4;    // coupling suite: b, w range upper bound
};

// Suite names in canonical order.
const std::vector<std::string>& suite_names();

// Runs one named suite. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace prefatt
