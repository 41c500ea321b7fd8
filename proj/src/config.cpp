#include "specrange/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "specrange/errors.hpp"
#include "specrange/io.hpp"
#include "specrange/rng.hpp"

namespace specrange {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, sep)) parts.push_back(token);
    return parts;
}

double to_double(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw validation_error("cannot parse " + what + " from '" + text + "'");
    }
}

int to_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw validation_error("cannot parse " + what + " from '" + text + "'");
    }
}

std::uint64_t to_u64(const std::string& text, const std::string& what) {
    try {
        return static_cast<std::uint64_t>(std::stoull(text));
    } catch (const std::exception&) {
        throw validation_error("cannot parse " + what + " from '" + text + "'");
    }
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    for (const std::string& part : split(text, ',')) {
        const std::string item = trim(part);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw validation_error("expected key=value, got '" + item + "'");
        }
        kv[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
    return kv;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const std::string& part : split(text, '+')) {
        const std::string item = trim(part);
        if (!item.empty()) values.push_back(to_int(item, "index list entry"));
    }
    return values;
}

GraphSource parse_graph_source(const std::string& text) {
    GraphSource source;
    if (text.rfind("sensor:", 0) == 0 || text == "sensor") {
        source.kind = GraphSource::Kind::sensor;
        if (text != "sensor") {
            const auto parts = split(text.substr(7), ',');
            if (parts.size() != 3) {
                throw validation_error("sensor source must be 'sensor:n,R,seed'");
            }
            source.sensor.n = to_int(trim(parts[0]), "sensor node count");
            source.sensor.radius = to_double(trim(parts[1]), "sensor radius");
            source.sensor.seed = to_u64(trim(parts[2]), "sensor seed");
        }
        return source;
    }
    source.path = text;
    source.kind = ends_with(text, ".csv") ? GraphSource::Kind::csv : GraphSource::Kind::edges;
    return source;
}

PairSpec parse_pair_spec(const std::string& text) {
    PairSpec spec;
    const auto colon = text.find(':');
    const std::string kind = trim(colon == std::string::npos ? text : text.substr(0, colon));
    spec.kind = pair_kind_from_string(kind);
    if (colon == std::string::npos) return spec;
    for (const auto& [key, value] : parse_kv(text.substr(colon + 1))) {
        if (key == "center" || key == "w") spec.center = to_int(value, "center");
        else if (key == "r" || key == "radius") spec.ball_radius = to_double(value, "ball radius");
        else if (key == "N" || key == "bandwidth") spec.bandwidth = to_int(value, "bandwidth");
        else if (key == "alpha") spec.alpha = to_double(value, "alpha");
        else if (key == "beta") spec.beta = to_double(value, "beta");
        else if (key == "nodes") spec.nodes = parse_int_list(value);
        else if (key == "freqs") spec.freqs = parse_int_list(value);
        else if (key == "f") spec.f_path = value;
        else if (key == "ghat") spec.ghat_path = value;
        else throw validation_error("unknown pair parameter '" + key + "'");
    }
    return spec;
}

AngleSpec parse_angle_spec(const std::string& text) {
    AngleSpec spec;
    if (text.rfind("uniform:", 0) == 0) {
        spec.mode = AngleSpec::Mode::uniform;
        spec.count = to_int(trim(text.substr(8)), "angle count");
        if (spec.count < 3) throw validation_error("uniform angle count must be >= 3");
        return spec;
    }
    if (text.rfind("adaptive:", 0) == 0) {
        spec.mode = AngleSpec::Mode::adaptive;
        const auto parts = split(text.substr(9), ',');
        if (parts.size() != 2) throw validation_error("adaptive schedule must be 'adaptive:tol,Kmax'");
        spec.tol = to_double(trim(parts[0]), "adaptive tolerance");
        spec.k_max = to_int(trim(parts[1]), "adaptive K_max");
        return spec;
    }
    if (text == "adaptive") return spec;
    throw validation_error("angle schedule must be 'uniform:K' or 'adaptive:tol,Kmax'");
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file '" + path + "'");

    RunConfig config;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw validation_error(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (section == "graph") {
            if (key == "source") config.graph = parse_graph_source(value);
            else if (key == "n") config.graph.sensor.n = to_int(value, "n");
            else if (key == "R") config.graph.sensor.radius = to_double(value, "R");
            else if (key == "seed") config.graph.sensor.seed = to_u64(value, "seed");
            else if (key == "basis") config.basis_path = value;
            else throw validation_error("unknown [graph] key '" + key + "'");
        } else if (section == "pair") {
            if (key == "kind") config.pair.kind = pair_kind_from_string(value);
            else if (key == "center") config.pair.center = to_int(value, "center");
            else if (key == "r" || key == "radius") config.pair.ball_radius = to_double(value, "radius");
            else if (key == "N" || key == "bandwidth") config.pair.bandwidth = to_int(value, "N");
            else if (key == "alpha") config.pair.alpha = to_double(value, "alpha");
            else if (key == "beta") config.pair.beta = to_double(value, "beta");
            else if (key == "nodes") config.pair.nodes = parse_int_list(value);
            else if (key == "freqs") config.pair.freqs = parse_int_list(value);
            else if (key == "f") config.pair.f_path = value;
            else if (key == "ghat") config.pair.ghat_path = value;
            else throw validation_error("unknown [pair] key '" + key + "'");
        } else if (section == "angles") {
            if (key == "schedule") config.angles = parse_angle_spec(value);
            else if (key == "K") {
                config.angles.mode = AngleSpec::Mode::uniform;
                config.angles.count = to_int(value, "K");
            } else if (key == "tol") config.angles.tol = to_double(value, "tol");
            else if (key == "kmax") config.angles.k_max = to_int(value, "kmax");
            else throw validation_error("unknown [angles] key '" + key + "'");
        } else if (section == "run" || section.empty()) {
            if (key == "theta") config.theta = to_double(value, "theta");
            else if (key == "out") config.out_dir = value;
            else if (key == "formats") {
                config.formats.clear();
                for (const std::string& f : split(value, ',')) config.formats.push_back(trim(f));
            } else if (key == "k") config.eigvec_index = to_int(value, "k");
            else throw validation_error("unknown [run] key '" + key + "'");
        } else {
            throw validation_error("unknown config section '" + section + "'");
        }
    }
    return config;
}

PointCloud sensor_points(int n, std::uint64_t seed) {
    if (n <= 0) throw validation_error("sensor node count must be positive");
    Rng rng(seed);
    PointCloud points(n, 2);
    for (int i = 0; i < n; ++i) {
        points(i, 0) = rng.uniform();
        points(i, 1) = rng.uniform();
    }
    return points;
}

LoadedGraph load_graph(const GraphSource& source) {
    LoadedGraph loaded;
    switch (source.kind) {
        case GraphSource::Kind::sensor: {
            const PointCloud points = sensor_points(source.sensor.n, source.sensor.seed);
            loaded.graph = radius_graph(points, source.sensor.radius);
            loaded.points = points;
            loaded.seeded = true;
            loaded.seed = source.sensor.seed;
            break;
        }
        case GraphSource::Kind::csv: {
            const PointCloud points = read_point_cloud(source.path);
            // CSV sources reuse the radius stored alongside the sensor spec.
            loaded.graph = radius_graph(points, source.sensor.radius);
            loaded.points = points;
            break;
        }
        case GraphSource::Kind::edges: {
            loaded.graph = read_edge_list(source.path);
            break;
        }
    }
    return loaded;
}

int resolve_center(const PairSpec& spec, const LoadedGraph& loaded) {
    if (spec.center >= 0) {
        if (spec.center >= loaded.graph.n) throw validation_error("center node out of range");
        return spec.center;
    }
    if (!loaded.points) return 0;
    const PointCloud& pts = *loaded.points;
    const Eigen::RowVectorXd centroid = pts.colwise().mean();
    int best = 0;
    double best_dist = (pts.row(0) - centroid).norm();
    for (int i = 1; i < pts.rows(); ++i) {
        const double d = (pts.row(i) - centroid).norm();
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    return best;
}

namespace {

std::vector<int> ball_nodes(const PointCloud& pts, int center, double radius) {
    std::vector<int> nodes;
    for (int i = 0; i < pts.rows(); ++i) {
        if ((pts.row(i) - pts.row(center)).norm() <= radius) nodes.push_back(i);
    }
    return nodes;
}

std::vector<int> spectral_set(const PairSpec& spec, int n) {
    if (!spec.freqs.empty()) return spec.freqs;
    const int bandwidth = spec.bandwidth > 0 ? spec.bandwidth : std::max(1, n / 4);
    if (bandwidth > n) throw validation_error("bandwidth exceeds the number of frequencies");
    return bandlimit_set(bandwidth);
}

}  // namespace

FilterPair build_pair(const PairSpec& spec, const LoadedGraph& loaded, const Graph& g,
                      const EigenDecomposition& decomp) {
    FilterPair pair;
    pair.label = spec.kind;
    const int n = g.n;

    switch (spec.kind) {
        case PairKind::projection_projection: {
            std::vector<int> nodes = spec.nodes;
            if (nodes.empty()) {
                if (!loaded.points) {
                    throw validation_error(
                        "projection pair needs point coordinates for the spatial ball; "
                        "pass nodes=... for coordinate-free graphs");
                }
                nodes = ball_nodes(*loaded.points, resolve_center(spec, loaded), spec.ball_radius);
            }
            pair.spatial = projection_spatial(n, nodes);
            pair.spectral = projection_spectral(n, spectral_set(spec, n));
            break;
        }
        case PairKind::distance_projection: {
            const GeodesicProfile profile = geodesic(g, resolve_center(spec, loaded));
            pair.spatial = distance_spatial(profile, 1.0);
            pair.spectral = projection_spectral(n, spectral_set(spec, n));
            break;
        }
        case PairKind::modified_distance_projection: {
            const GeodesicProfile profile = geodesic(g, resolve_center(spec, loaded));
            pair.spatial = distance_spatial(profile, spec.alpha);
            pair.spectral = smoothed_bandlimit(decomp.values, spectral_set(spec, n), spec.beta);
            break;
        }
        case PairKind::distance_laplace: {
            const GeodesicProfile profile = geodesic(g, resolve_center(spec, loaded));
            pair.spatial = distance_spatial(profile, 2.0);
            pair.spectral = laplace_spectral(decomp.values);
            break;
        }
        case PairKind::laplace_laplace: {
            pair.spatial = SpatialFilter{laplace_spectral(decomp.values).ghat};
            pair.spectral = laplace_spectral(decomp.values);
            break;
        }
        case PairKind::custom: {
            if (spec.f_path.empty() || spec.ghat_path.empty()) {
                throw validation_error("custom pair needs f=<path> and ghat=<path>");
            }
            const auto f = read_vector(spec.f_path);
            const auto ghat = read_vector(spec.ghat_path);
            pair.spatial = spatial_from_values(
                Eigen::Map<const Eigen::VectorXd>(f.data(), static_cast<Eigen::Index>(f.size())));
            pair.spectral = spectral_from_values(Eigen::Map<const Eigen::VectorXd>(
                ghat.data(), static_cast<Eigen::Index>(ghat.size())));
            if (pair.spatial.f.size() != n || pair.spectral.ghat.size() != n) {
                throw validation_error("custom filter dimensions do not match the graph");
            }
            break;
        }
    }
    return pair;
}

}  // namespace specrange
