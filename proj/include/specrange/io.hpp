#pragma once

#include <string>
#include <vector>

#include "specrange/graph.hpp"

namespace specrange {

/// Point-cloud CSV: one point per line, comma-separated coordinates, lines
/// starting with '#' are comments.
PointCloud read_point_cloud(const std::string& path);
void write_point_cloud(const std::string& path, const PointCloud& points,
                       const std::vector<std::string>& header_comments = {});

/// Edge-list text: first line "n <count>", then "i j w" per line (0-based).
Graph read_edge_list(const std::string& path);
void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& header_comments = {});

/// Generic numeric CSV with '#' comments; used to round-trip our own outputs.
std::vector<std::vector<double>> read_table(const std::string& path);

/// Single numeric column (comma- or line-separated values).
std::vector<double> read_vector(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace specrange
