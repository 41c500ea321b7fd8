#include "specrange/uncertainty.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

constexpr double kVacuousTol = 1e-12;
constexpr double kClusterTol = 1e-9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

GammaBound make_bound(double sigma1, int corner_m, int corner_c) {
    GammaBound bound;
    bound.sigma1 = sigma1;
    bound.corner_m = corner_m;
    bound.corner_c = corner_c;
    bound.vacuous = sigma1 >= 1.0 - kVacuousTol;
    return bound;
}

// Reduce a localization point to the corner's local coordinates (u, v) where
// the constraint reads: v <= gamma(u) whenever u * v >= sigma1.
std::pair<double, double> corner_coordinates(const GammaBound& bound, const LocalizationPoint& p) {
    const double u = bound.corner_m == 1 ? p.m : 1.0 - p.m;
    const double v = bound.corner_c == 1 ? p.c : 1.0 - p.c;
    return {u, v};
}

void check_angles(const std::vector<double>& angles) {
    const int count = static_cast<int>(angles.size());
    if (count < 3) throw validation_error("at least 3 angles are required");
    for (int k = 0; k < count; ++k) {
        if (angles[k] < 0.0 || angles[k] >= kTwoPi) {
            throw validation_error("angles must lie in [0, 2*pi)");
        }
        if (k > 0 && !(angles[k] > angles[k - 1])) {
            throw validation_error("angles must be strictly increasing");
        }
    }
    for (int k = 0; k < count; ++k) {
        const double prev = k == 0 ? angles[count - 1] - kTwoPi : angles[k - 1];
        if (angles[k] - prev >= std::numbers::pi) {
            throw validation_error("consecutive angle gap >= pi; outer vertices undefined");
        }
    }
}

Point2 to_point(const LocalizationPoint& p) { return Point2{p.m, p.c}; }

// Intersection of the supporting lines at angles (theta_prev, theta), i.e.
// the outer vertex q^(theta): rotate (rho1, (rho1 cos d - rho1_prev)/sin d)
// back by theta, with d = theta - theta_prev.
Point2 outer_vertex(double theta_prev, double rho_prev, double theta, double rho) {
    const double d = theta - theta_prev;
    const double a = rho;
    const double b = (rho * std::cos(d) - rho_prev) / std::sin(d);
    return Point2{std::cos(theta) * a - std::sin(theta) * b,
                  std::sin(theta) * a + std::cos(theta) * b};
}

struct SandwichGeometry {
    std::vector<Point2> boundary;   // p^(theta_k)
    std::vector<Point2> outer_raw;  // q^(theta_k)
};

SandwichGeometry sandwich_geometry(const std::vector<SupportLine>& lines) {
    const int count = static_cast<int>(lines.size());
    SandwichGeometry geo;
    geo.boundary.reserve(count);
    geo.outer_raw.reserve(count);
    for (const SupportLine& line : lines) geo.boundary.push_back(to_point(line.point));
    for (int k = 0; k < count; ++k) {
        const int prev = (k + count - 1) % count;
        geo.outer_raw.push_back(
            outer_vertex(lines[prev].theta, lines[prev].rho1, lines[k].theta, lines[k].rho1));
    }
    return geo;
}

RangeApproximation assemble_approximation(std::vector<double> angles,
                                          std::vector<SupportLine> lines) {
    const SandwichGeometry geo = sandwich_geometry(lines);
    RangeApproximation approx;
    approx.angles = std::move(angles);
    approx.lines = std::move(lines);
    approx.inner = convex_hull(geo.boundary);
    approx.outer = convex_hull(geo.outer_raw);
    approx.area_gap = polygon_area(approx.outer) - polygon_area(approx.inner);
    approx.hausdorff_gap = hausdorff_from_to(approx.outer, approx.inner);
    for (const Point2& v : approx.inner) {
        if (!point_in_convex(approx.outer, v, 1e-9)) {
            throw numerical_error("sandwich violation: inner vertex outside the outer polygon");
        }
    }
    return approx;
}

void require_region_dimension(const OperatorBundle& bundle) {
    if (bundle.n() < 3) {
        throw validation_error(
            "region computations require n >= 3; for n = 2 the admissible set is an "
            "elliptical boundary, not a convex region");
    }
}

// Local sandwich slack for the sector between consecutive supporting angles:
// the triangle spanned by the two boundary points and the intersection of
// their supporting lines.
double sector_gap(const Point2& p_prev, const Point2& q, const Point2& p_next) {
    return 0.5 * std::abs(cross(p_prev, q, p_next));
}

}  // namespace

double gamma_curve(const GammaBound& bound, double t) {
    if (bound.vacuous) {
        throw validation_error("gamma bound is vacuous (sigma1 >= 1): no uncertainty at corner (" +
                               std::to_string(bound.corner_m) + ", " +
                               std::to_string(bound.corner_c) + ")");
    }
    if (t < bound.sigma1 - kVacuousTol || t > 1.0 + kVacuousTol) {
        throw validation_error("gamma argument outside [sigma1, 1]");
    }
    t = std::clamp(t, bound.sigma1, 1.0);
    const double s1 = bound.sigma1;
    const double root = std::sqrt(t * s1) + std::sqrt((1.0 - t) * (1.0 - s1));
    return root * root;
}

CornerBounds corner_bounds(const EigenDecomposition& decomp, const FilterPair& pair, bool dual) {
    const SpatialFilter f_star = reflect(pair.spatial);
    const SpectralFilter g_star = reflect(pair.spectral);
    const std::array<FilterPair, 4> reflected{
        FilterPair{pair.spatial, pair.spectral, pair.label},
        FilterPair{pair.spatial, g_star, pair.label},
        FilterPair{f_star, pair.spectral, pair.label},
        FilterPair{f_star, g_star, pair.label},
    };
    const std::array<std::pair<int, int>, 4> corners{
        std::pair<int, int>{1, 1}, {1, 0}, {0, 1}, {0, 0}};

    CornerBounds bounds;
    for (int i = 0; i < 4; ++i) {
        try {
            const OperatorBundle bundle = dual ? dual_bundle(decomp, reflected[i])
                                               : build_bundle(decomp, reflected[i]);
            const SOperatorSpectrum spectrum = s_spectrum(bundle);
            bounds.corners[i] =
                make_bound(spectrum.sigma[0], corners[i].first, corners[i].second);
        } catch (const numerical_error&) {
            // Dual reflections can lose positive semidefiniteness; the corner
            // simply provides no bound then.
            bounds.corners[i] = make_bound(1.0, corners[i].first, corners[i].second);
        }
    }
    return bounds;
}

GammaVerdict in_gamma_region(const CornerBounds& bounds, const LocalizationPoint& p, double tol) {
    GammaVerdict verdict;
    for (int i = 0; i < 4; ++i) {
        const GammaBound& bound = bounds.corners[i];
        CornerVerdict& corner = verdict.corners[i];
        if (bound.vacuous) continue;
        const auto [u, v] = corner_coordinates(bound, p);
        if (u * v < bound.sigma1) continue;
        corner.active = true;
        const double cap = gamma_curve(bound, std::clamp(u, bound.sigma1, 1.0));
        corner.margin = cap - v;
        corner.pass = v <= cap + tol;
        verdict.pass = verdict.pass && corner.pass;
    }
    return verdict;
}

SupportLine support_line(const OperatorBundle& bundle, double theta) {
    const RotatedOperator rot = rotated(bundle, theta);
    const int n = bundle.n();

    int cluster = 1;
    while (cluster < n && rot.rho[cluster] >= rot.rho[0] - kClusterTol) ++cluster;

    Eigen::VectorXd phi;
    if (cluster == 1) {
        phi = rot.Phi.col(0);
    } else {
        // Flat boundary segment: within the top eigenspace pick the vector
        // whose localization point sits at the counterclockwise end of the
        // face, by maximizing the tangential form -sin(theta) M + cos(theta) C.
        const Eigen::MatrixXd basis = rot.Phi.leftCols(cluster);
        const Eigen::MatrixXd tangential =
            -std::sin(theta) * Eigen::MatrixXd(bundle.mf_diag.asDiagonal()) +
            std::cos(theta) * bundle.Cg;
        const Eigen::MatrixXd restricted = basis.transpose() * tangential * basis;
        const EigenDecomposition sub = eig_sym(restricted);
        phi = basis * sub.vectors.col(cluster - 1);
        phi.normalize();
    }

    SupportLine line;
    line.theta = theta;
    line.rho1 = rot.rho[0];
    line.point = mean_values(bundle, phi);
    return line;
}

RangeApproximation sandwich_polygons(const OperatorBundle& bundle, std::vector<double> angles) {
    require_region_dimension(bundle);
    check_angles(angles);
    std::vector<SupportLine> lines;
    lines.reserve(angles.size());
    for (double theta : angles) lines.push_back(support_line(bundle, theta));
    RangeApproximation approx = assemble_approximation(std::move(angles), std::move(lines));
    approx.tol_met = true;
    return approx;
}

RangeApproximation adaptive_sandwich(const OperatorBundle& bundle, double tol, int k_max) {
    require_region_dimension(bundle);
    if (!(tol > 0.0)) throw validation_error("adaptive tolerance must be positive");
    if (k_max < 4) throw validation_error("adaptive K_max must be at least 4");

    std::vector<double> angles = uniform_angles(4);
    std::vector<SupportLine> lines;
    for (double theta : angles) lines.push_back(support_line(bundle, theta));

    RangeApproximation approx;
    while (true) {
        approx = assemble_approximation(angles, lines);
        if (approx.area_gap <= tol) {
            approx.tol_met = true;
            return approx;
        }
        if (static_cast<int>(angles.size()) >= k_max) break;

        const SandwichGeometry geo = sandwich_geometry(lines);
        const int count = static_cast<int>(lines.size());
        int worst = -1;
        double worst_gap = -1.0;
        for (int k = 0; k < count; ++k) {
            const int prev = (k + count - 1) % count;
            const double prev_theta = k == 0 ? angles[count - 1] - kTwoPi : angles[prev];
            const double width = angles[k] - prev_theta;
            if (width < 1e-9) continue;  // sector too thin to refine further
            const double gap = sector_gap(geo.boundary[prev], geo.outer_raw[k], geo.boundary[k]);
            if (gap > worst_gap) {
                worst_gap = gap;
                worst = k;
            }
        }
        if (worst < 0) break;

        const int prev = (worst + count - 1) % count;
        const double prev_theta = worst == 0 ? angles[count - 1] - kTwoPi : angles[prev];
        double mid = 0.5 * (prev_theta + angles[worst]);
        if (mid < 0.0) mid += kTwoPi;
        const auto pos = std::lower_bound(angles.begin(), angles.end(), mid);
        if (pos != angles.end() && std::abs(*pos - mid) < 1e-12) break;
        const auto idx = pos - angles.begin();
        angles.insert(pos, mid);
        lines.insert(lines.begin() + idx, support_line(bundle, mid));
    }
    approx.tol_met = approx.area_gap <= tol;
    return approx;
}

std::vector<double> uniform_angles(int count) {
    if (count < 3) throw validation_error("at least 3 angles are required");
    std::vector<double> angles(count);
    for (int k = 0; k < count; ++k) angles[k] = kTwoPi * k / count;
    return angles;
}

std::vector<ScatterPoint> eigenvector_scatter(const OperatorBundle& bundle,
                                              const SOperatorSpectrum& spectrum) {
    std::vector<ScatterPoint> points;
    points.reserve(spectrum.sigma.size());
    for (int k = 0; k < spectrum.sigma.size(); ++k) {
        points.push_back(
            ScatterPoint{k, mean_values(bundle, spectrum.Psi.col(k)), spectrum.sigma[k]});
    }
    return points;
}

std::vector<ScatterPoint> eigenvector_scatter(const OperatorBundle& bundle,
                                              const RotatedOperator& rot) {
    std::vector<ScatterPoint> points;
    points.reserve(rot.rho.size());
    for (int k = 0; k < rot.rho.size(); ++k) {
        points.push_back(ScatterPoint{k, mean_values(bundle, rot.Phi.col(k)), rot.rho[k]});
    }
    return points;
}

}  // namespace specrange
