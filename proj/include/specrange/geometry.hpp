#pragma once

#include <vector>

namespace specrange {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Convex polygon as a counterclockwise vertex list without a repeated
/// closing vertex. Degenerate polygons (point, segment) are allowed.
using Polygon = std::vector<Point2>;

/// Cross product (a - o) x (b - o).
double cross(const Point2& o, const Point2& a, const Point2& b);

/// Monotone-chain convex hull, counterclockwise. Collinear points are
/// dropped; coincident points are merged within 1e-10.
Polygon convex_hull(std::vector<Point2> points);

/// Shoelace area; 0 for degenerate polygons.
double polygon_area(const Polygon& poly);

/// Membership test with an absolute distance tolerance (convex, ccw input).
bool point_in_convex(const Polygon& poly, const Point2& p, double tol);

/// Euclidean distance from p to the polygon (0 when inside).
double distance_to_polygon(const Polygon& poly, const Point2& p);

/// Directed Hausdorff distance max_{v in from} dist(v, to); for convex
/// polygons the maximum over vertices equals the maximum over the boundary.
double hausdorff_from_to(const Polygon& from, const Polygon& to);

}  // namespace specrange
