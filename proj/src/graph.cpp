#include "specrange/graph.hpp"

#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

constexpr double kSymmetryTol = 1e-12;

void check_adjacency(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw validation_error("adjacency matrix must be square");
    const int n = static_cast<int>(a.rows());
    for (int i = 0; i < n; ++i) {
        if (a(i, i) != 0.0) {
            throw validation_error("self-loop at node " + std::to_string(i) + " is not allowed");
        }
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(a(i, j))) throw validation_error("adjacency entries must be finite");
            if (a(i, j) < 0.0) throw validation_error("adjacency entries must be nonnegative");
            if (std::abs(a(i, j) - a(j, i)) > kSymmetryTol) {
                throw validation_error("adjacency matrix must be symmetric within 1e-12");
            }
        }
    }
}

}  // namespace

Graph radius_graph(const PointCloud& points, double radius) {
    if (points.rows() == 0) throw validation_error("point cloud is empty");
    if (!(radius > 0.0)) throw validation_error("radius must be positive");
    if (!points.allFinite()) throw validation_error("point coordinates must be finite");

    const int n = static_cast<int>(points.rows());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = (points.row(i) - points.row(j)).norm();
            if (d == 0.0) {
                throw validation_error("points " + std::to_string(i) + " and " + std::to_string(j) +
                                       " coincide; points must be distinct");
            }
            if (d <= radius) a(i, j) = a(j, i) = 1.0;
        }
    }
    return Graph{n, std::move(a)};
}

Graph graph_from_edges(int n, const std::vector<std::tuple<int, int, double>>& edges) {
    if (n <= 0) throw validation_error("node count must be positive");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j, w] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw validation_error("edge index out of range: (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
        }
        if (i == j) throw validation_error("self-loop at node " + std::to_string(i) + " is not allowed");
        if (!(w > 0.0)) throw validation_error("edge weight must be positive");
        const auto key = std::minmax(i, j);
        if (!seen.insert(key).second) {
            throw validation_error("duplicate edge (" + std::to_string(key.first) + ", " +
                                   std::to_string(key.second) + ")");
        }
        a(i, j) = a(j, i) = w;
    }
    return Graph{n, std::move(a)};
}

Graph graph_from_adjacency(const Eigen::MatrixXd& adjacency) {
    check_adjacency(adjacency);
    Eigen::MatrixXd a = 0.5 * (adjacency + adjacency.transpose());
    return Graph{static_cast<int>(a.rows()), std::move(a)};
}

Eigen::VectorXd degrees(const Graph& g) { return g.adjacency.rowwise().sum(); }

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
    const Eigen::VectorXd deg = degrees(g);
    for (int i = 0; i < g.n; ++i) {
        if (!(deg[i] > 0.0)) {
            throw validation_error("node " + std::to_string(i) +
                                   " is isolated (zero degree); normalized Laplacian undefined");
        }
    }
    const Eigen::VectorXd inv_sqrt = deg.array().rsqrt();
    Eigen::MatrixXd l = -(inv_sqrt.asDiagonal() * g.adjacency * inv_sqrt.asDiagonal());
    l.diagonal().array() += 1.0;
    return 0.5 * (l + l.transpose());
}

GeodesicProfile geodesic(const Graph& g, int center) {
    if (center < 0 || center >= g.n) throw validation_error("center node out of range");
    if (g.n == 1) throw validation_error("geodesic profile undefined on a single-node graph");

    std::vector<int> dist(g.n, -1);
    std::queue<int> frontier;
    dist[center] = 0;
    frontier.push(center);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < g.n; ++v) {
            if (g.adjacency(u, v) > 0.0 && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }
    int dmax = 0;
    for (int v = 0; v < g.n; ++v) {
        if (dist[v] < 0) {
            throw validation_error("graph is disconnected: node " + std::to_string(v) +
                                   " is unreachable from node " + std::to_string(center));
        }
        dmax = std::max(dmax, dist[v]);
    }
    return GeodesicProfile{center, std::move(dist), dmax};
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    if (g.n == 1) return true;
    std::vector<char> seen(g.n, 0);
    std::queue<int> frontier;
    seen[0] = 1;
    frontier.push(0);
    int reached = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v = 0; v < g.n; ++v) {
            if (g.adjacency(u, v) > 0.0 && !seen[v]) {
                seen[v] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == g.n;
}

int edge_count(const Graph& g) {
    int count = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.adjacency(i, j) > 0.0) ++count;
    return count;
}

}  // namespace specrange
