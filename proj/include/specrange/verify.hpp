#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "specrange/operators.hpp"
#include "specrange/uncertainty.hpp"

namespace specrange {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int samples = 100000;
    int angle_count = 64;
    double theta = 9.0 * 3.14159265358979323846 / 20.0;
    std::uint64_t seed = 7;
    int error_bound_signals = 200;
    int error_bound_grid = 20;
};

/// Runs the invariant suite for one bundle: the four sigma_1 norm
/// characterizations, the simple-eigenvalue sufficient condition, gamma corner
/// membership and polygon containment over random unit signals, the
/// theta = pi/4 two-sided bound, and the truncation error bounds.
std::vector<CheckResult> run_invariant_suite(const OperatorBundle& bundle,
                                             const CornerBounds& bounds,
                                             const VerifyOptions& options);

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

bool all_pass(const std::vector<CheckResult>& checks);

/// Drop test across the bandwidth index:
/// sigma_{N + ceil(n/10)} < 0.05 * sigma_{N - ceil(n/10)}.
bool sigma_drop_across_bandwidth(const Eigen::VectorXd& sigma, int bandwidth);

/// Relaxed variant for projection spatial filters, whose S drops earlier
/// (rank(S) <= |A|): the same ratio test at some index k <= bandwidth.
bool sigma_drop_at_or_before_bandwidth(const Eigen::VectorXd& sigma, int bandwidth);

/// Fraction of eigenvalues within `tol` of {0, cos(theta), sin(theta), 1}.
double cluster_fraction(const Eigen::VectorXd& rho, double theta, double tol = 0.05);

}  // namespace specrange
