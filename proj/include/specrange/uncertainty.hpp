#pragma once

#include <array>
#include <optional>
#include <vector>

#include "specrange/geometry.hpp"
#include "specrange/operators.hpp"

namespace specrange {

/// Closed-form corner bound derived from the top eigenvalue of a reflected
/// space-frequency operator. `corner` identifies which unit-square corner the
/// bound constrains: (1,1), (1,0), (0,1) or (0,0). A bound is vacuous when
/// sigma1 >= 1 (no uncertainty at that corner) or when the reflected operator
/// could not be formed.
struct GammaBound {
    double sigma1 = 1.0;
    int corner_m = 1;
    int corner_c = 1;
    bool vacuous = true;
};

/// gamma(t) = (sqrt(t sigma1) + sqrt((1-t)(1-sigma1)))^2 on [sigma1, 1].
double gamma_curve(const GammaBound& bound, double t);

/// Corner bounds for (f,g), (f,g*), (f*,g), (f*,g*), in that order.
struct CornerBounds {
    std::array<GammaBound, 4> corners;

    const GammaBound& fg() const { return corners[0]; }
    const GammaBound& fg_star() const { return corners[1]; }
    const GammaBound& f_star_g() const { return corners[2]; }
    const GammaBound& f_star_g_star() const { return corners[3]; }
};

CornerBounds corner_bounds(const EigenDecomposition& decomp, const FilterPair& pair,
                           bool dual = false);

struct CornerVerdict {
    bool active = false;  // the conditional constraint applies at this point
    bool pass = true;
    double margin = 0.0;  // gamma(t) - value; negative when violated
};

struct GammaVerdict {
    std::array<CornerVerdict, 4> corners;
    bool pass = true;
};

/// Evaluate the four conditional corner constraints at a localization point.
GammaVerdict in_gamma_region(const CornerBounds& bounds, const LocalizationPoint& p,
                        double tol = 1e-9);

/// Supporting line cos(theta) t + sin(theta) s = rho1 with a boundary point
/// on it.
struct SupportLine {
    double theta = 0.0;
    double rho1 = 0.0;
    LocalizationPoint point;
};

SupportLine support_line(const OperatorBundle& bundle, double theta);

/// Inner/outer polygon sandwich of the admissibility region.
struct RangeApproximation {
    std::vector<double> angles;
    std::vector<SupportLine> lines;
    Polygon inner;
    Polygon outer;
    double area_gap = 0.0;
    double hausdorff_gap = 0.0;
    bool tol_met = true;  // adaptive runs: whether the area-gap target was reached
};

/// K >= 3 strictly increasing angles in [0, 2pi) with all cyclic gaps < pi.
RangeApproximation sandwich_polygons(const OperatorBundle& bundle, std::vector<double> angles);

/// Starts from 4 uniform angles and bisects the sector with the largest
/// local inner/outer discrepancy until area(P_out) - area(P_in) <= tol or
/// K_max angles are in use.
RangeApproximation adaptive_sandwich(const OperatorBundle& bundle, double tol, int k_max);

std::vector<double> uniform_angles(int count);

/// Localization point and eigenvalue per eigenvector of S or R^(theta).
struct ScatterPoint {
    int k = 0;  // 0-based eigenvector index in descending-eigenvalue order
    LocalizationPoint point;
    double value = 0.0;
};

std::vector<ScatterPoint> eigenvector_scatter(const OperatorBundle& bundle,
                                              const SOperatorSpectrum& spectrum);
std::vector<ScatterPoint> eigenvector_scatter(const OperatorBundle& bundle,
                                              const RotatedOperator& rot);

}  // namespace specrange
