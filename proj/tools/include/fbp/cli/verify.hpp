#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fbp/cli/config.hpp"
#include "fbp/radial_stationary.hpp"

namespace fbp::cli {

enum class CheckStatus { pass, warn, fail };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

/// Worst residuals of one boundary-value problem of the perturbation fields.
struct BvpResidual {
    std::string field;
    double interior = 0.0;  // relative to the largest Laplacian term, floored at 1
    double boundary = 0.0;
};

/// First- and second-order fields of mode n against their defining problems
/// at `points` random interior and boundary points.
std::vector<BvpResidual> perturbation_residuals(const StationaryState& base, int n, int points, std::uint64_t seed);

/// Worst log-log slope deviation of the curvature expansions of order 1..3
/// from k + 1 over random shapes with R_S in [0.5, 1.5] (eps from 0.1
/// halving to 1e-3, absolute).
struct CurvatureSlopes {
    double slope[3] = {0.0, 0.0, 0.0};  // slope of the trial with the largest deviation
    double worst_deviation = 0.0;
};
CurvatureSlopes curvature_slopes(int trials, std::uint64_t seed);

/// Runs every check; individual failures never abort the suite.
std::vector<CheckResult> run_checks(const RunConfig& config);

/// Aligned pass/warn/fail table.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace fbp::cli
