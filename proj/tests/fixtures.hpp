#pragma once

// Shared fixtures: the two 4-node counterexample graphs with their displayed
// eigenbases, random connected graphs, random filters, and small independent
// oracles (power iteration) used to cross-check the dense solves.

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "specrange/filters.hpp"
#include "specrange/graph.hpp"
#include "specrange/operators.hpp"
#include "specrange/rng.hpp"
#include "specrange/spectral.hpp"

namespace fixtures {

using namespace specrange;

// Two disjoint edges 0-1 and 2-3.
inline Graph bipartite_graph() {
    return graph_from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
}

inline Graph k4_graph() {
    return graph_from_edges(
        4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
}

inline Graph path4_graph() {
    return graph_from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
}

// The displayed eigenbasis of the bipartite Laplacian (lambda = 0,0,2,2).
inline EigenDecomposition bipartite_decomp() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::VectorXd values(4);
    values << 0.0, 0.0, 2.0, 2.0;
    Eigen::MatrixXd vectors(4, 4);
    vectors << s, 0, s, 0,
               s, 0, -s, 0,
               0, s, 0, s,
               0, s, 0, -s;
    return decomposition_from_parts(values, vectors);
}

// The displayed eigenbasis of the K4 Laplacian (lambda = 0, 4/3, 4/3, 4/3).
inline EigenDecomposition k4_decomp() {
    const double h = 0.5;
    const double q = std::sqrt(2.0) / 2.0;
    Eigen::VectorXd values(4);
    values << 0.0, 4.0 / 3.0, 4.0 / 3.0, 4.0 / 3.0;
    Eigen::MatrixXd vectors(4, 4);
    vectors << h, h, q, 0,
               h, h, -q, 0,
               h, -h, 0, q,
               h, -h, 0, -q;
    return decomposition_from_parts(values, vectors);
}

inline FilterPair bipartite_pair() {
    Eigen::VectorXd f(4), g(4);
    f << 1, 0, 1, 0;
    g << 1, 0, 1, 0;
    return FilterPair{SpatialFilter{f}, SpectralFilter{g}, PairKind::custom};
}

inline FilterPair k4_pair() {
    Eigen::VectorXd f(4), g(4);
    f << 1, 1, 0, 0;
    g << 0, 0, 1, 0;
    return FilterPair{SpatialFilter{f}, SpectralFilter{g}, PairKind::custom};
}

// Erdos-Renyi style graph, redrawn until connected.
inline Graph random_connected_graph(Rng& rng, int n, double p = 0.45) {
    while (true) {
        std::vector<std::tuple<int, int, double>> edges;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng.uniform() < p) edges.emplace_back(i, j, 1.0);
            }
        }
        Graph g = graph_from_edges(n, edges);
        if (is_connected(g)) return g;
    }
}

// Strictly interior random values with exactly one entry equal to 1, so the
// eigenvalue 1 of the induced operator is simple.
inline Eigen::VectorXd random_simple_filter(Rng& rng, int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform(0.05, 0.9);
    v[rng.index(n)] = 1.0;
    return v;
}

inline FilterPair random_pair(Rng& rng, int n) {
    return FilterPair{SpatialFilter{random_simple_filter(rng, n)},
                      SpectralFilter{random_simple_filter(rng, n)}, PairKind::custom};
}

// Independent top-eigenvalue oracle: shifted power iteration with Rayleigh
// quotient, never touching the library's eigensolver.
inline double power_iteration_top(const Eigen::MatrixXd& m, int iterations = 20000) {
    const int n = static_cast<int>(m.rows());
    const double shift = 2.0 * m.cwiseAbs().rowwise().sum().maxCoeff() + 1.0;
    const Eigen::MatrixXd shifted = m + shift * Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    for (int i = 0; i < n; ++i) v[i] += 0.01 * (i + 1);
    v.normalize();
    for (int it = 0; it < iterations; ++it) {
        v = shifted * v;
        v.normalize();
    }
    return v.dot(m * v);
}

// One of the four standard pair kinds materialized on an abstract graph.
inline FilterPair standard_pair(int which, const Graph& g, const EigenDecomposition& decomp,
                                Rng& rng) {
    const int n = g.n;
    const int bandwidth = std::max(2, n / 2);
    const int center = rng.index(n);
    switch (which % 4) {
        case 0: {
            std::vector<int> nodes{center};
            for (int v = 0; v < n; ++v) {
                if (g.adjacency(center, v) > 0.0) nodes.push_back(v);
            }
            return FilterPair{projection_spatial(n, nodes),
                              projection_spectral(n, bandlimit_set(bandwidth)),
                              PairKind::projection_projection};
        }
        case 1:
            return FilterPair{distance_spatial(geodesic(g, center), 1.0),
                              projection_spectral(n, bandlimit_set(bandwidth)),
                              PairKind::distance_projection};
        case 2:
            return FilterPair{distance_spatial(geodesic(g, center), 0.5),
                              smoothed_bandlimit(decomp.values, bandlimit_set(bandwidth), 2.0),
                              PairKind::modified_distance_projection};
        default:
            return FilterPair{distance_spatial(geodesic(g, center), 2.0),
                              laplace_spectral(decomp.values), PairKind::distance_laplace};
    }
}

}  // namespace fixtures
