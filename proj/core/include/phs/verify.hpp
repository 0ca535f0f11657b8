#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phs {

/// Knobs for the verification suites. Zero means "suite default".
struct VerifyOptions {
    std::uint64_t seed = 1;
    int dim = 0;     // restrict metric/topology grids to one dimension
    int trials = 0;  // per-case sample count
    int grid = 10;   // resolution R for the sigma suite
    double tol = 1e-10;  // closed-form vs oracle agreement
};

struct SuiteResult {
    std::string suite;
    int cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Valid suite names: metrics, topology, convergence, sigma, all.
std::vector<std::string> suite_names();

/// Run one named invariant suite. Deterministic given (name, options); all
/// randomness is derived from options.seed by fixed labels. Throws
/// InvalidArgument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace phs
