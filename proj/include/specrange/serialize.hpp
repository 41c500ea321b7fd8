#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "specrange/approximation.hpp"
#include "specrange/uncertainty.hpp"

namespace specrange {

/// Polygon export schema:
/// {"angles":[...], "rho1":[...], "boundary_points":[[m,c],...],
///  "inner":[[m,c],...], "outer":[[m,c],...], "area_gap": g,
///  "sigma1_corners": {"fg":..., "fg*":..., "f*g":..., "f*g*":...}}
/// Vacuous corners are emitted as null.
nlohmann::json range_to_json(const RangeApproximation& approx, const CornerBounds& bounds);

/// {kept:[...], actual_error_sq, bound, mean, variance} (kept is 1-based in
/// the export, matching the u_1..u_n indexing convention).
nlohmann::json expansion_to_json(const ExpansionReport& report);

/// Boundary CSV: '#'-comment header then one "m,c" row per boundary point.
std::string boundary_csv(const RangeApproximation& approx,
                         const std::vector<std::string>& header_comments);

/// Decay CSV: row k holds the k-th (descending) eigenvalue of each column.
std::string decay_csv(const std::vector<std::string>& column_names,
                      const std::vector<Eigen::VectorXd>& columns,
                      const std::vector<std::string>& header_comments);

/// Scatter CSV rows: k (1-based), m, c, eigenvalue.
std::string scatter_csv(const std::vector<ScatterPoint>& points,
                        const std::vector<std::string>& header_comments);

std::string format_full(double v);

}  // namespace specrange
