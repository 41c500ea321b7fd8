#include "specrange/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace specrange {

namespace {

constexpr double kDedupeTol = 1e-10;

double dist2(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double point_segment_distance(const Point2& a, const Point2& b, const Point2& p) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return std::sqrt(dist2(a, p));
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 proj{a.x + t * vx, a.y + t * vy};
    return std::sqrt(dist2(proj, p));
}

}  // namespace

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Polygon convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) {
                              return std::abs(a.x - b.x) <= kDedupeTol &&
                                     std::abs(a.y - b.y) <= kDedupeTol;
                          }),
              pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;

    std::vector<Point2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && dist2(hull[0], hull[1]) <= kDedupeTol * kDedupeTol) hull.resize(1);
    return hull;
}

double polygon_area(const Polygon& poly) {
    if (poly.size() < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % poly.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(twice);
}

bool point_in_convex(const Polygon& poly, const Point2& p, double tol) {
    if (poly.empty()) return false;
    if (poly.size() == 1) return std::sqrt(dist2(poly[0], p)) <= tol;
    if (poly.size() == 2) return point_segment_distance(poly[0], poly[1], p) <= tol;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % poly.size()];
        const double len = std::sqrt(dist2(a, b));
        if (len <= kDedupeTol) continue;
        // signed distance of p to edge line, positive inside for ccw polygons
        if (cross(a, b, p) / len < -tol) return false;
    }
    return true;
}

double distance_to_polygon(const Polygon& poly, const Point2& p) {
    if (poly.empty()) return std::numeric_limits<double>::infinity();
    if (point_in_convex(poly, p, 0.0)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    if (poly.size() == 1) return std::sqrt(dist2(poly[0], p));
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % poly.size()];
        best = std::min(best, point_segment_distance(a, b, p));
    }
    return best;
}

double hausdorff_from_to(const Polygon& from, const Polygon& to) {
    double worst = 0.0;
    for (const Point2& v : from) worst = std::max(worst, distance_to_polygon(to, v));
    return worst;
}

}  // namespace specrange
