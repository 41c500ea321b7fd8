#pragma once

#include <functional>
#include <string>
#include <vector>

#include "specrange/geometry.hpp"

namespace specrange {

/// Minimal deterministic SVG writer. World coordinates are mapped to a fixed
/// pixel canvas and emitted with three decimals, so identical inputs produce
/// byte-identical files.
class SvgCanvas {
public:
    SvgCanvas(double world_min_x, double world_min_y, double world_max_x, double world_max_y,
              int width_px = 640, int height_px = 640, int margin_px = 48);

    void comment(const std::string& text);
    void polygon(const Polygon& poly, const std::string& stroke, const std::string& fill,
                 double stroke_width = 1.5, double fill_opacity = 0.25);
    void polyline(const std::vector<Point2>& pts, const std::string& stroke,
                  double stroke_width = 1.5, bool dashed = false);
    void circle(const Point2& center, double radius_px, const std::string& fill,
                const std::string& stroke = "none", double stroke_width = 1.0);
    void line(const Point2& a, const Point2& b, const std::string& stroke,
              double stroke_width = 1.0, bool dashed = false);
    void text(const Point2& anchor, const std::string& content, int font_px = 13,
              const std::string& fill = "#333333");
    /// Frame and tick labels for the world bounding box.
    void axes(const std::string& x_label, const std::string& y_label);

    std::string str() const;

private:
    Point2 map(const Point2& world) const;

    double min_x_, min_y_, max_x_, max_y_;
    int width_, height_, margin_;
    std::string body_;
};

/// Piecewise-linear sample points of a function over [lo, hi].
std::vector<Point2> sample_curve(double lo, double hi, int samples,
                                 const std::function<double(double)>& fn);

/// Diverging blue-white-red color for v in [lo, hi].
std::string diverging_color(double v, double lo, double hi);

/// Lightweight well-formedness check used by tests: tags balance and
/// attributes are quoted.
bool svg_is_well_formed(const std::string& content);

}  // namespace specrange
