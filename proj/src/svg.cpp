#include "specrange/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace specrange {

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

SvgCanvas::SvgCanvas(double world_min_x, double world_min_y, double world_max_x,
                     double world_max_y, int width_px, int height_px, int margin_px)
    : min_x_(world_min_x),
      min_y_(world_min_y),
      max_x_(world_max_x),
      max_y_(world_max_y),
      width_(width_px),
      height_(height_px),
      margin_(margin_px) {
    if (max_x_ <= min_x_) max_x_ = min_x_ + 1.0;
    if (max_y_ <= min_y_) max_y_ = min_y_ + 1.0;
}

Point2 SvgCanvas::map(const Point2& world) const {
    const double sx = (width_ - 2.0 * margin_) / (max_x_ - min_x_);
    const double sy = (height_ - 2.0 * margin_) / (max_y_ - min_y_);
    return Point2{margin_ + (world.x - min_x_) * sx,
                  height_ - margin_ - (world.y - min_y_) * sy};
}

void SvgCanvas::comment(const std::string& text) {
    body_ += "<!-- " + escape_xml(text) + " -->\n";
}

void SvgCanvas::polygon(const Polygon& poly, const std::string& stroke, const std::string& fill,
                        double stroke_width, double fill_opacity) {
    if (poly.empty()) return;
    body_ += "<polygon points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2 p = map(poly[i]);
        if (i) body_ += " ";
        body_ += px(p.x) + "," + px(p.y);
    }
    body_ += "\" stroke=\"" + stroke + "\" fill=\"" + fill + "\" fill-opacity=\"" +
             px(fill_opacity) + "\" stroke-width=\"" + px(stroke_width) + "\"/>\n";
}

void SvgCanvas::polyline(const std::vector<Point2>& pts, const std::string& stroke,
                         double stroke_width, bool dashed) {
    if (pts.size() < 2) return;
    body_ += "<polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2 p = map(pts[i]);
        if (i) body_ += " ";
        body_ += px(p.x) + "," + px(p.y);
    }
    body_ += "\" stroke=\"" + stroke + "\" fill=\"none\" stroke-width=\"" + px(stroke_width) +
             "\"";
    if (dashed) body_ += " stroke-dasharray=\"6 4\"";
    body_ += "/>\n";
}

void SvgCanvas::circle(const Point2& center, double radius_px, const std::string& fill,
                       const std::string& stroke, double stroke_width) {
    const Point2 p = map(center);
    body_ += "<circle cx=\"" + px(p.x) + "\" cy=\"" + px(p.y) + "\" r=\"" + px(radius_px) +
             "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             px(stroke_width) + "\"/>\n";
}

void SvgCanvas::line(const Point2& a, const Point2& b, const std::string& stroke,
                     double stroke_width, bool dashed) {
    const Point2 pa = map(a), pb = map(b);
    body_ += "<line x1=\"" + px(pa.x) + "\" y1=\"" + px(pa.y) + "\" x2=\"" + px(pb.x) +
             "\" y2=\"" + px(pb.y) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
             px(stroke_width) + "\"";
    if (dashed) body_ += " stroke-dasharray=\"4 3\"";
    body_ += "/>\n";
}

void SvgCanvas::text(const Point2& anchor, const std::string& content, int font_px,
                     const std::string& fill) {
    const Point2 p = map(anchor);
    body_ += "<text x=\"" + px(p.x) + "\" y=\"" + px(p.y) + "\" font-size=\"" +
             std::to_string(font_px) + "\" font-family=\"sans-serif\" fill=\"" + fill + "\">" +
             escape_xml(content) + "</text>\n";
}

void SvgCanvas::axes(const std::string& x_label, const std::string& y_label) {
    const Point2 origin{min_x_, min_y_};
    const Point2 xe{max_x_, min_y_};
    const Point2 ye{min_x_, max_y_};
    line(origin, xe, "#000000", 1.2);
    line(origin, ye, "#000000", 1.2);
    line(Point2{min_x_, max_y_}, Point2{max_x_, max_y_}, "#bbbbbb", 0.8);
    line(Point2{max_x_, min_y_}, Point2{max_x_, max_y_}, "#bbbbbb", 0.8);

    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", min_x_);
    text(Point2{min_x_, min_y_ - 0.06 * (max_y_ - min_y_)}, buf);
    std::snprintf(buf, sizeof(buf), "%g", max_x_);
    text(Point2{max_x_ - 0.04 * (max_x_ - min_x_), min_y_ - 0.06 * (max_y_ - min_y_)}, buf);
    std::snprintf(buf, sizeof(buf), "%g", max_y_);
    text(Point2{min_x_ - 0.08 * (max_x_ - min_x_), max_y_}, buf);
    text(Point2{max_x_ - 0.25 * (max_x_ - min_x_), min_y_ - 0.11 * (max_y_ - min_y_)}, x_label);
    text(Point2{min_x_ - 0.10 * (max_x_ - min_x_), max_y_ + 0.05 * (max_y_ - min_y_)}, y_label);
}

std::string SvgCanvas::str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
        << height_ << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n"
        << "<rect width=\"" << width_ << "\" height=\"" << height_ << "\" fill=\"#ffffff\"/>\n"
        << body_ << "</svg>\n";
    return out.str();
}

std::vector<Point2> sample_curve(double lo, double hi, int samples,
                                 const std::function<double(double)>& fn) {
    std::vector<Point2> pts;
    if (samples < 2 || !(hi > lo)) return pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * i / (samples - 1);
        pts.push_back(Point2{t, fn(t)});
    }
    return pts;
}

std::string diverging_color(double v, double lo, double hi) {
    double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    t = std::clamp(t, 0.0, 1.0);
    int r, g, b;
    if (t < 0.5) {  // blue -> white
        const double u = t / 0.5;
        r = static_cast<int>(std::lround(59 + (255 - 59) * u));
        g = static_cast<int>(std::lround(76 + (255 - 76) * u));
        b = static_cast<int>(std::lround(192 + (255 - 192) * u));
    } else {  // white -> red
        const double u = (t - 0.5) / 0.5;
        r = static_cast<int>(std::lround(255 + (180 - 255) * u));
        g = static_cast<int>(std::lround(255 + (4 - 255) * u));
        b = static_cast<int>(std::lround(255 + (38 - 255) * u));
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

bool svg_is_well_formed(const std::string& content) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < content.size()) {
        if (content[i] != '<') {
            ++i;
            continue;
        }
        const std::size_t end = content.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = content.substr(i + 1, end - i - 1);
        i = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || (tag.size() >= 3 && tag.substr(0, 3) == "!--")) continue;
        // unquoted '"' parity inside the tag
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (tag[0] == '/') {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
            continue;
        }
        if (tag.back() == '/') continue;  // self-closing
        const std::size_t space = tag.find_first_of(" \t\n");
        stack.push_back(space == std::string::npos ? tag : tag.substr(0, space));
    }
    return stack.empty();
}

}  // namespace specrange
