#include "specrange/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool is_comment_or_blank(const std::string& line) {
    const std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

double parse_double(const std::string& token, const std::string& path) {
    const std::string t = trim(token);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw io_error(path + ": cannot parse number '" + t + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> tokens;
    std::stringstream stream(line);
    std::string token;
    while (std::getline(stream, token, sep)) tokens.push_back(token);
    return tokens;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    return in;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<std::vector<double>> read_table(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) continue;
        std::vector<double> row;
        for (const std::string& token : split(line, ',')) row.push_back(parse_double(token, path));
        rows.push_back(std::move(row));
    }
    return rows;
}

PointCloud read_point_cloud(const std::string& path) {
    const auto rows = read_table(path);
    if (rows.empty()) throw validation_error(path + ": point cloud is empty");
    const std::size_t dim = rows[0].size();
    if (dim == 0) throw validation_error(path + ": point rows have no coordinates");
    PointCloud points(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim) {
            throw validation_error(path + ": inconsistent coordinate count on row " +
                                   std::to_string(i + 1));
        }
        for (std::size_t j = 0; j < dim; ++j) points(i, j) = rows[i][j];
    }
    if (!points.allFinite()) throw validation_error(path + ": nonfinite coordinates");
    return points;
}

void write_point_cloud(const std::string& path, const PointCloud& points,
                       const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const std::string& comment : header_comments) out << "# " << comment << "\n";
    for (int i = 0; i < points.rows(); ++i) {
        for (int j = 0; j < points.cols(); ++j) {
            if (j) out << ",";
            out << format_double(points(i, j));
        }
        out << "\n";
    }
    write_text_file(path, out.str());
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    int n = -1;
    std::vector<std::tuple<int, int, double>> edges;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line)) continue;
        std::istringstream stream(line);
        if (n < 0) {
            std::string tag;
            stream >> tag >> n;
            if (tag != "n" || !stream || n <= 0) {
                throw io_error(path + ": expected header line 'n <count>'");
            }
            continue;
        }
        int i = 0, j = 0;
        double w = 0.0;
        stream >> i >> j >> w;
        if (!stream) throw io_error(path + ": expected 'i j w' on line '" + trim(line) + "'");
        edges.emplace_back(i, j, w);
    }
    if (n < 0) throw io_error(path + ": missing 'n <count>' header line");
    return graph_from_edges(n, edges);
}

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const std::string& comment : header_comments) out << "# " << comment << "\n";
    out << "n " << g.n << "\n";
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if (g.adjacency(i, j) > 0.0) {
                out << i << " " << j << " " << format_double(g.adjacency(i, j)) << "\n";
            }
        }
    }
    write_text_file(path, out.str());
}

std::vector<double> read_vector(const std::string& path) {
    std::vector<double> values;
    for (const auto& row : read_table(path)) {
        for (double v : row) values.push_back(v);
    }
    if (values.empty()) throw validation_error(path + ": no values found");
    return values;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw io_error("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace specrange
