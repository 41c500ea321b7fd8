#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specrange/filters.hpp"
#include "specrange/graph.hpp"
#include "specrange/spectral.hpp"

namespace specrange {

struct SensorSpec {
    int n = 253;
    double radius = 1.0 / 6.0;
    std::uint64_t seed = 42;
};

struct GraphSource {
    enum class Kind { csv, sensor, edges };
    Kind kind = Kind::sensor;
    std::string path;
    SensorSpec sensor;
};

/// Filter pair recipe; which fields matter depends on `kind`.
struct PairSpec {
    PairKind kind = PairKind::distance_projection;
    int center = -1;           // -1: node nearest the point-cloud centroid
    double ball_radius = 0.25; // projection pair spatial ball (needs coordinates)
    int bandwidth = 0;         // 0: defaults to max(1, n/4)
    double alpha = 0.5;
    double beta = 2.0;
    std::vector<int> nodes;    // explicit A (0-based), overrides the ball
    std::vector<int> freqs;    // explicit B (1-based), overrides the bandwidth
    std::string f_path;        // custom: spatial filter values
    std::string ghat_path;     // custom: spectral filter values
};

struct AngleSpec {
    enum class Mode { uniform, adaptive };
    Mode mode = Mode::adaptive;
    int count = 64;       // uniform
    double tol = 1e-4;    // adaptive
    int k_max = 512;      // adaptive
};

struct RunConfig {
    GraphSource graph;
    std::string basis_path;  // optional pinned eigenbasis (CSV, orthonormal columns)
    PairSpec pair;
    AngleSpec angles;
    double theta = 9.0 * 3.14159265358979323846 / 20.0;
    std::string out_dir = "out";
    std::vector<std::string> formats = {"svg", "csv", "json"};
    int eigvec_index = 1;  // 1-based, for the eigenvector command
};

/// Flat key-value config file with [section] headers; '#' starts a comment.
/// Recognized keys are listed in the README.
RunConfig parse_config_file(const std::string& path);

/// "sensor:n,R,seed" or a path ending in a readable file; ".csv" loads a
/// point cloud, anything else an edge list.
GraphSource parse_graph_source(const std::string& text);

/// "kind:key=value,key=value". Example: "distance-projection:center=3,N=100".
PairSpec parse_pair_spec(const std::string& text);

/// "uniform:K" or "adaptive:tol,Kmax".
AngleSpec parse_angle_spec(const std::string& text);

struct LoadedGraph {
    Graph graph;
    std::optional<PointCloud> points;
    bool seeded = false;
    std::uint64_t seed = 0;
};

/// Uniform points in [0,1]^2 from the deterministic generator.
PointCloud sensor_points(int n, std::uint64_t seed);

LoadedGraph load_graph(const GraphSource& source);

/// Resolve the spatial center node: explicit index, else nearest to the
/// centroid when coordinates exist, else node 0.
int resolve_center(const PairSpec& spec, const LoadedGraph& loaded);

/// Materialize the filter pair on a concrete graph/spectrum.
FilterPair build_pair(const PairSpec& spec, const LoadedGraph& loaded, const Graph& g,
                      const EigenDecomposition& decomp);

std::vector<int> parse_int_list(const std::string& text);  // "1+2+7"

}  // namespace specrange
