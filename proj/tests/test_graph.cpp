#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "specrange/config.hpp"
#include "specrange/errors.hpp"
#include "specrange/graph.hpp"

using namespace specrange;

TEST_CASE("radius graph basics") {
    SUBCASE("two points at distance 2R give no edge") {
        PointCloud pts(2, 2);
        pts << 0.0, 0.0, 0.5, 0.0;
        const Graph g = radius_graph(pts, 0.25);
        CHECK(edge_count(g) == 0);
    }
    SUBCASE("five mutually close points give K5") {
        PointCloud pts(5, 2);
        pts << 0.0, 0.0, 0.01, 0.0, 0.0, 0.01, 0.01, 0.01, 0.005, 0.005;
        const Graph g = radius_graph(pts, 0.1);
        CHECK(edge_count(g) == 10);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(radius_graph(PointCloud(0, 2), 0.1), validation_error);
        PointCloud bad(1, 2);
        bad << 0.0, std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(radius_graph(bad, 0.1), validation_error);
        PointCloud dup(2, 2);
        dup << 0.5, 0.5, 0.5, 0.5;
        CHECK_THROWS_AS(radius_graph(dup, 0.1), validation_error);
    }
}

TEST_CASE("frozen sensor graph regression: seed 42, n=253, R=1/6 has 2453 edges") {
    const PointCloud pts = sensor_points(253, 42);
    const Graph g = radius_graph(pts, 1.0 / 6.0);
    CHECK(g.n == 253);
    CHECK(edge_count(g) == 2453);
    CHECK(is_connected(g));
}

TEST_CASE("radius graph is permutation equivariant") {
    Rng rng(3);
    PointCloud pts(40, 2);
    for (int i = 0; i < 40; ++i) {
        pts(i, 0) = rng.uniform();
        pts(i, 1) = rng.uniform();
    }
    const Graph g = radius_graph(pts, 0.3);

    std::vector<int> perm(40);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 39; i > 0; --i) std::swap(perm[i], perm[rng.index(i + 1)]);

    PointCloud permuted(40, 2);
    for (int i = 0; i < 40; ++i) permuted.row(i) = pts.row(perm[i]);
    const Graph gp = radius_graph(permuted, 0.3);
    for (int i = 0; i < 40; ++i) {
        for (int j = 0; j < 40; ++j) {
            CHECK(gp.adjacency(i, j) == g.adjacency(perm[i], perm[j]));
        }
    }
}

TEST_CASE("graph_from_edges fixtures and errors") {
    const Graph bip = fixtures::bipartite_graph();
    CHECK(bip.n == 4);
    CHECK(edge_count(bip) == 2);
    CHECK_FALSE(is_connected(bip));
    CHECK(degrees(bip).minCoeff() == 1.0);  // disconnected but all degrees positive

    const Graph k4 = fixtures::k4_graph();
    CHECK(edge_count(k4) == 6);
    CHECK(degrees(k4).isApproxToConstant(3.0));

    const Graph two = graph_from_edges(2, {{0, 1, 1.0}});
    CHECK(two.n == 2);

    CHECK_THROWS_AS(graph_from_edges(3, {{0, 3, 1.0}}), validation_error);
    CHECK_THROWS_AS(graph_from_edges(3, {{1, 1, 1.0}}), validation_error);
    CHECK_THROWS_AS(graph_from_edges(3, {{0, 1, 1.0}, {1, 0, 2.0}}), validation_error);
    CHECK_THROWS_AS(graph_from_edges(3, {{0, 1, 0.0}}), validation_error);
    CHECK_THROWS_AS(graph_from_edges(3, {{0, 1, -2.0}}), validation_error);
}

TEST_CASE("normalized Laplacian matches the displayed matrices") {
    SUBCASE("bipartite counterexample") {
        Eigen::MatrixXd expected(4, 4);
        expected << 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 1, -1, 0, 0, -1, 1;
        const Eigen::MatrixXd l = normalized_laplacian(fixtures::bipartite_graph());
        CHECK((l - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("K4") {
        Eigen::MatrixXd expected(4, 4);
        expected << 3, -1, -1, -1, -1, 3, -1, -1, -1, -1, 3, -1, -1, -1, -1, 3;
        expected /= 3.0;
        const Eigen::MatrixXd l = normalized_laplacian(fixtures::k4_graph());
        CHECK((l - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("single edge") {
        Eigen::MatrixXd expected(2, 2);
        expected << 1, -1, -1, 1;
        const Eigen::MatrixXd l = normalized_laplacian(graph_from_edges(2, {{0, 1, 1.0}}));
        CHECK((l - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
    SUBCASE("isolated node error names the node") {
        const Graph g = graph_from_edges(3, {{0, 1, 1.0}});
        CHECK_THROWS_WITH_AS(normalized_laplacian(g),
                             doctest::Contains("node 2"), validation_error);
    }
    SUBCASE("symmetry and unit diagonal on a weighted random graph") {
        Rng rng(5);
        std::vector<std::tuple<int, int, double>> edges;
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if (rng.uniform() < 0.5) edges.emplace_back(i, j, rng.uniform(0.1, 3.0));
        Graph g = graph_from_edges(12, edges);
        if (degrees(g).minCoeff() > 0.0) {
            const Eigen::MatrixXd l = normalized_laplacian(g);
            CHECK((l - l.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((l.diagonal().array() - 1.0).abs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("geodesic profiles") {
    SUBCASE("path graph") {
        const GeodesicProfile prof = geodesic(fixtures::path4_graph(), 0);
        CHECK(prof.dist == std::vector<int>{0, 1, 2, 3});
        CHECK(prof.dmax == 3);
    }
    SUBCASE("K4 from node 2") {
        const GeodesicProfile prof = geodesic(fixtures::k4_graph(), 2);
        CHECK(prof.dist == std::vector<int>{1, 1, 0, 1});
        CHECK(prof.dmax == 1);
    }
    SUBCASE("disconnected graph errors") {
        CHECK_THROWS_AS(geodesic(fixtures::bipartite_graph(), 0), validation_error);
    }
    SUBCASE("triangle inequality on sampled triples") {
        Rng rng(17);
        const Graph g = fixtures::random_connected_graph(rng, 14);
        std::vector<GeodesicProfile> profiles;
        for (int w = 0; w < g.n; ++w) profiles.push_back(geodesic(g, w));
        for (int trial = 0; trial < 200; ++trial) {
            const int u = rng.index(g.n), v = rng.index(g.n), w = rng.index(g.n);
            CHECK(profiles[u].dist[v] <= profiles[u].dist[w] + profiles[w].dist[v]);
        }
    }
}

TEST_CASE("adjacency symmetry holds for all constructors") {
    Rng rng(23);
    const Graph g = fixtures::random_connected_graph(rng, 10);
    CHECK((g.adjacency - g.adjacency.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK_THROWS_AS(graph_from_adjacency((Eigen::MatrixXd(2, 2) << 0, 1, 2, 0).finished()),
                    validation_error);
    CHECK_THROWS_AS(graph_from_adjacency((Eigen::MatrixXd(2, 2) << 1, 1, 1, 0).finished()),
                    validation_error);
}
