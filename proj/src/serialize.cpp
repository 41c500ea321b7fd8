#include "specrange/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace specrange {

namespace {

nlohmann::json point_list(const Polygon& poly) {
    nlohmann::json list = nlohmann::json::array();
    for (const Point2& p : poly) list.push_back({p.x, p.y});
    return list;
}

nlohmann::json corner_value(const GammaBound& bound) {
    if (bound.vacuous) return nullptr;
    return bound.sigma1;
}

}  // namespace

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json range_to_json(const RangeApproximation& approx, const CornerBounds& bounds) {
    nlohmann::json j;
    j["angles"] = approx.angles;
    nlohmann::json rho = nlohmann::json::array();
    nlohmann::json boundary = nlohmann::json::array();
    for (const SupportLine& line : approx.lines) {
        rho.push_back(line.rho1);
        boundary.push_back({line.point.m, line.point.c});
    }
    j["rho1"] = rho;
    j["boundary_points"] = boundary;
    j["inner"] = point_list(approx.inner);
    j["outer"] = point_list(approx.outer);
    j["area_gap"] = approx.area_gap;
    j["sigma1_corners"] = {{"fg", corner_value(bounds.fg())},
                           {"fg*", corner_value(bounds.fg_star())},
                           {"f*g", corner_value(bounds.f_star_g())},
                           {"f*g*", corner_value(bounds.f_star_g_star())}};
    return j;
}

nlohmann::json expansion_to_json(const ExpansionReport& report) {
    std::vector<int> kept_one_based;
    kept_one_based.reserve(report.kept.size());
    for (int k : report.kept) kept_one_based.push_back(k + 1);
    nlohmann::json j;
    j["kept"] = kept_one_based;
    j["actual_error_sq"] = report.actual_error_sq;
    j["bound"] = report.bound;
    j["mean"] = report.mean;
    j["variance"] = report.variance;
    return j;
}

std::string boundary_csv(const RangeApproximation& approx,
                         const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const std::string& comment : header_comments) out << "# " << comment << "\n";
    out << "# m,c\n";
    for (const SupportLine& line : approx.lines) {
        out << format_full(line.point.m) << "," << format_full(line.point.c) << "\n";
    }
    return out.str();
}

std::string decay_csv(const std::vector<std::string>& column_names,
                      const std::vector<Eigen::VectorXd>& columns,
                      const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const std::string& comment : header_comments) out << "# " << comment << "\n";
    out << "# k";
    for (const std::string& name : column_names) out << "," << name;
    out << "\n";
    Eigen::Index rows = 0;
    for (const auto& col : columns) rows = std::max(rows, col.size());
    for (Eigen::Index k = 0; k < rows; ++k) {
        out << (k + 1);
        for (const auto& col : columns) {
            out << ",";
            if (k < col.size()) out << format_full(col[k]);
        }
        out << "\n";
    }
    return out.str();
}

std::string scatter_csv(const std::vector<ScatterPoint>& points,
                        const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const std::string& comment : header_comments) out << "# " << comment << "\n";
    out << "# k,m,c,eigenvalue\n";
    for (const ScatterPoint& p : points) {
        out << (p.k + 1) << "," << format_full(p.point.m) << "," << format_full(p.point.c) << ","
            << format_full(p.value) << "\n";
    }
    return out.str();
}

}  // namespace specrange
