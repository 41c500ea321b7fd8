#pragma once

#include <Eigen/Core>
#include <tuple>
#include <vector>

namespace specrange {

/// One point per row, at least one coordinate column, finite entries.
using PointCloud = Eigen::MatrixXd;

/// Undirected harmonic structure: symmetric nonnegative adjacency with a
/// zero diagonal. Disconnected graphs and isolated nodes are legal here;
/// positive degree is enforced at Laplacian construction.
struct Graph {
    int n = 0;
    Eigen::MatrixXd adjacency;
};

/// Hop-count distances from a center node on a connected graph.
struct GeodesicProfile {
    int center = 0;
    std::vector<int> dist;
    int dmax = 0;
};

/// Unweighted graph connecting points at euclidean distance in (0, radius].
Graph radius_graph(const PointCloud& points, double radius);

/// Graph from an explicit undirected edge list; duplicate edges, self-loops,
/// nonpositive weights and out-of-range indices are rejected.
Graph graph_from_edges(int n, const std::vector<std::tuple<int, int, double>>& edges);

/// Checked construction from a dense adjacency matrix.
Graph graph_from_adjacency(const Eigen::MatrixXd& adjacency);

/// Row sums of the adjacency (the diagonal of the degree matrix T).
Eigen::VectorXd degrees(const Graph& g);

/// L = I - T^{-1/2} A T^{-1/2}; every node must have positive degree.
Eigen::MatrixXd normalized_laplacian(const Graph& g);

/// BFS hop distances from center; errors when the graph is disconnected.
GeodesicProfile geodesic(const Graph& g, int center);

bool is_connected(const Graph& g);

int edge_count(const Graph& g);

}  // namespace specrange
