#include "specrange/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "specrange/approximation.hpp"
#include "specrange/rng.hpp"

namespace specrange {

namespace {

std::string num(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const OperatorBundle& bundle,
                                             const CornerBounds& bounds,
                                             const VerifyOptions& options) {
    std::vector<CheckResult> checks;
    const int n = bundle.n();
    Rng rng(options.seed);

    {  // sigma_1 operator-norm characterizations agree
        const Sigma1Characterizations norms = sigma1_characterizations(bundle);
        checks.push_back({"sigma1_norm_characterizations", norms.spread() <= 1e-9,
                          "spread " + num(norms.spread()) + ", sigma1 " + num(norms.s_norm) +
                              ", gap 1-sigma1 " + num(1.0 - norms.s_norm)});
    }

    const SOperatorSpectrum spectrum = s_spectrum(bundle);
    {  // simple top eigenvalues of M_f and C_g force sigma1 < 1
        const PairValidation validation = validate(bundle.pair);
        const bool premise = validation.mf_simple() && validation.cg_simple() && !bundle.dual;
        const bool pass = !premise || spectrum.sigma[0] < 1.0 - 1e-12;
        checks.push_back({"simple_top_eigenvalues_force_gap", pass,
                          premise ? "premise holds, sigma1 = " + num(spectrum.sigma[0])
                                  : "premise not satisfied; check vacuous"});
    }

    {  // corner bound status; informational, plus the (1,1) attainment report
        std::string corners;
        const std::array<const char*, 4> names{"fg", "fg*", "f*g", "f*g*"};
        for (int i = 0; i < 4; ++i) {
            if (!corners.empty()) corners += ", ";
            corners += std::string(names[i]) + "=" +
                       (bounds.corners[i].vacuous ? "vacuous" : num(bounds.corners[i].sigma1));
        }
        checks.push_back({"corner_bounds_status", true, corners});
        if (spectrum.sigma[0] >= 1.0 - 1e-12) {
            const LocalizationPoint p = mean_values(bundle, spectrum.Psi.col(0));
            const bool attained = std::abs(p.m - 1.0) <= 1e-8 && std::abs(p.c - 1.0) <= 1e-8;
            checks.push_back({"corner_11_attained", attained,
                              "sigma1 = " + num(spectrum.sigma[0]) + " at (" + num(p.m) + ", " +
                                  num(p.c) + ")"});
        }
    }

    {  // spectrum of S within [0, 1]
        const bool pass =
            spectrum.sigma.minCoeff() >= -1e-9 && spectrum.sigma.maxCoeff() <= 1.0 + 1e-9;
        checks.push_back({"s_spectrum_in_unit_interval", pass,
                          "sigma in [" + num(spectrum.sigma.minCoeff()) + ", " +
                              num(spectrum.sigma.maxCoeff()) + "]"});
    }

    RangeApproximation approx;
    bool region_available = n >= 3;
    if (region_available) {
        approx = sandwich_polygons(bundle, uniform_angles(options.angle_count));
    }

    if (region_available) {  // sampled admissible points stay inside P_out and W_gamma
        bool inside = true;
        bool gamma_ok = true;
        double worst_margin = 0.0;
        for (int i = 0; i < options.samples; ++i) {
            const Signal x = rng.unit_vector(n);
            const LocalizationPoint p = mean_values(bundle, x);
            if (!point_in_convex(approx.outer, Point2{p.m, p.c}, 1e-9)) inside = false;
            const GammaVerdict verdict = in_gamma_region(bounds, p);
            if (!verdict.pass) {
                gamma_ok = false;
                for (const CornerVerdict& c : verdict.corners) {
                    if (c.active) worst_margin = std::min(worst_margin, c.margin);
                }
            }
        }
        checks.push_back({"samples_inside_outer_polygon", inside,
                          num(options.samples) + " samples, K = " + num(options.angle_count)});
        checks.push_back({"samples_inside_gamma_region", gamma_ok,
                          gamma_ok ? "all corner constraints satisfied"
                                   : "worst margin " + num(worst_margin)});

        bool inner_ok = true;
        for (const Point2& v : approx.inner) {
            if (!point_in_convex(approx.outer, v, 1e-9)) inner_ok = false;
        }
        checks.push_back({"inner_polygon_inside_outer", inner_ok,
                          "inner vertices " + num(approx.inner.size())});

        bool scatter_ok = true;
        for (const ScatterPoint& sp : eigenvector_scatter(bundle, spectrum)) {
            if (!point_in_convex(approx.outer, Point2{sp.point.m, sp.point.c}, 1e-9)) {
                scatter_ok = false;
            }
        }
        checks.push_back({"eigenvector_scatter_inside_outer_polygon", scatter_ok, ""});
    }

    {  // theta = pi/4 two-sided bound
        const RotatedOperator rot = rotated(bundle, std::numbers::pi / 4.0);
        const double lo = std::numbers::sqrt2 * rot.rho[n - 1];
        const double hi = std::numbers::sqrt2 * rot.rho[0];
        bool pass = true;
        for (int i = 0; i < std::min(options.samples, 20000); ++i) {
            const Signal x = rng.unit_vector(n);
            const LocalizationPoint p = mean_values(bundle, x);
            const double sum = p.m + p.c;
            if (sum < lo - 1e-9 || sum > hi + 1e-9) pass = false;
        }
        checks.push_back({"pi_over_4_two_sided_bound", pass,
                          "sqrt(2)*rho_n = " + num(lo) + ", sqrt(2)*rho_1 = " + num(hi)});
    }

    {  // truncation error bounds
        const RotatedOperator rot = rotated(bundle, options.theta);
        bool pass = true;
        for (int i = 0; i < options.error_bound_signals && pass; ++i) {
            const Signal x = rng.unit_vector(n);
            for (const OperatorSpectrumView view :
                 {OperatorSpectrumView(spectrum), OperatorSpectrumView(rot)}) {
                const double top = view.values[0];
                const double bottom = view.values[view.values.size() - 1];
                for (int j = 0; j < options.error_bound_grid; ++j) {
                    const double s =
                        bottom + (top - bottom) * (j + 0.5) / options.error_bound_grid;
                    if (!(s < top)) continue;
                    const ExpansionReport report = truncate_by_threshold(view, x, s);
                    if (report.actual_error_sq > report.bound + 1e-9) pass = false;
                    const double a = 1e-3 + (j + 1.0) / options.error_bound_grid;
                    const ExpansionReport interval = truncate_by_interval(view, x, a);
                    if (interval.actual_error_sq > interval.bound + 1e-9) pass = false;
                }
            }
            const SpectralDistribution mu = spectral_distribution(spectrum, x);
            const double total = mu.mu.sum();
            const double mean = mu.mu.dot(spectrum.sigma);
            const double sbar = s_mean(bundle, x);
            if (std::abs(total - 1.0) > 1e-10 || std::abs(mean - sbar) > 1e-10) pass = false;
        }
        checks.push_back({"truncation_error_bounds", pass,
                          num(options.error_bound_signals) + " signals x " +
                              num(options.error_bound_grid) + " thresholds"});
    }

    return checks;
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
    nlohmann::json list = nlohmann::json::array();
    for (const CheckResult& check : checks) {
        list.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    }
    return {{"checks", list}, {"pass", all_pass(checks)}};
}

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

bool sigma_drop_across_bandwidth(const Eigen::VectorXd& sigma, int bandwidth) {
    const int n = static_cast<int>(sigma.size());
    const int offset = (n + 9) / 10;
    const int before = bandwidth - offset;
    const int after = bandwidth + offset;
    if (before < 1 || after > n) return false;
    return sigma[after - 1] < 0.05 * sigma[before - 1];
}

bool sigma_drop_at_or_before_bandwidth(const Eigen::VectorXd& sigma, int bandwidth) {
    for (int k = 1; k <= bandwidth; ++k) {
        if (sigma_drop_across_bandwidth(sigma, k)) return true;
    }
    return false;
}

double cluster_fraction(const Eigen::VectorXd& rho, double theta, double tol) {
    const std::array<double, 4> centers{0.0, std::cos(theta), std::sin(theta), 1.0};
    int hits = 0;
    for (int k = 0; k < rho.size(); ++k) {
        for (double c : centers) {
            if (std::abs(rho[k] - c) <= tol) {
                ++hits;
                break;
            }
        }
    }
    return rho.size() > 0 ? static_cast<double>(hits) / rho.size() : 0.0;
}

}  // namespace specrange
