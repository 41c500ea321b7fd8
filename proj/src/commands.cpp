#include "specrange/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "specrange/errors.hpp"
#include "specrange/io.hpp"
#include "specrange/serialize.hpp"
#include "specrange/svg.hpp"
#include "specrange/verify.hpp"

namespace specrange {

namespace {

namespace fs = std::filesystem;

struct Workspace {
    LoadedGraph loaded;
    EigenDecomposition decomp;
    FilterPair pair;
    OperatorBundle bundle;
    std::vector<std::string> header;
    fs::path out;
};

std::vector<std::string> source_header(const RunConfig& config, const LoadedGraph& loaded) {
    std::vector<std::string> header;
    std::ostringstream line;
    switch (config.graph.kind) {
        case GraphSource::Kind::sensor:
            line << "graph=sensor n=" << config.graph.sensor.n
                 << " R=" << format_full(config.graph.sensor.radius)
                 << " seed=" << config.graph.sensor.seed;
            break;
        case GraphSource::Kind::csv:
            line << "graph=csv path=" << config.graph.path
                 << " R=" << format_full(config.graph.sensor.radius);
            break;
        case GraphSource::Kind::edges:
            line << "graph=edges path=" << config.graph.path;
            break;
    }
    header.push_back(line.str());
    header.push_back(std::string("pair=") + to_string(config.pair.kind));
    header.push_back("nodes=" + std::to_string(loaded.graph.n) +
                     " edges=" + std::to_string(edge_count(loaded.graph)));
    return header;
}

// Pinned eigenbasis fixture: columns of the CSV replace the solver's basis
// after checking they actually diagonalize this graph's Laplacian.
EigenDecomposition pinned_decomposition(const std::string& path, const Eigen::MatrixXd& l) {
    const auto rows = read_table(path);
    const int n = static_cast<int>(l.rows());
    if (static_cast<int>(rows.size()) != n) {
        throw validation_error("basis file '" + path + "' must have " + std::to_string(n) +
                               " rows");
    }
    Eigen::MatrixXd u(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw validation_error("basis file '" + path + "' must be square");
        }
        for (int j = 0; j < n; ++j) u(i, j) = rows[i][j];
    }
    Eigen::VectorXd values(n);
    for (int k = 0; k < n; ++k) values[k] = u.col(k).dot(l * u.col(k));
    const double residual = (l * u - u * values.asDiagonal()).cwiseAbs().maxCoeff();
    if (residual > 1e-8) {
        throw validation_error("basis file '" + path +
                               "' does not diagonalize the Laplacian (residual " +
                               std::to_string(residual) + ")");
    }
    return decomposition_from_parts(values, u);
}

Workspace open_workspace(const RunConfig& config, bool need_pair = true) {
    Workspace ws;
    ws.loaded = load_graph(config.graph);
    const Eigen::MatrixXd laplacian = normalized_laplacian(ws.loaded.graph);
    ws.decomp = config.basis_path.empty() ? eig_sym(laplacian)
                                          : pinned_decomposition(config.basis_path, laplacian);
    if (need_pair) {
        ws.pair = build_pair(config.pair, ws.loaded, ws.loaded.graph, ws.decomp);
        ws.bundle = config.pair.kind == PairKind::laplace_laplace
                        ? dual_bundle(ws.decomp, ws.pair)
                        : build_bundle(ws.decomp, ws.pair);
    }
    ws.header = source_header(config, ws.loaded);
    ws.out = fs::path(config.out_dir);
    std::error_code ec;
    fs::create_directories(ws.out, ec);
    if (ec) throw io_error("cannot create output directory '" + config.out_dir + "'");
    return ws;
}

bool wants(const RunConfig& config, const std::string& format) {
    return std::find(config.formats.begin(), config.formats.end(), format) !=
           config.formats.end();
}

RangeApproximation compute_range(const RunConfig& config, const OperatorBundle& bundle) {
    if (config.angles.mode == AngleSpec::Mode::uniform) {
        return sandwich_polygons(bundle, uniform_angles(config.angles.count));
    }
    return adaptive_sandwich(bundle, config.angles.tol, config.angles.k_max);
}

void draw_gamma_arcs(SvgCanvas& canvas, const CornerBounds& bounds) {
    for (const GammaBound& bound : bounds.corners) {
        if (bound.vacuous) continue;
        const auto curve = sample_curve(bound.sigma1, 1.0, 160, [&](double u) {
            return gamma_curve(bound, u);
        });
        std::vector<Point2> arc;
        arc.reserve(curve.size());
        for (const Point2& p : curve) {
            const double m = bound.corner_m == 1 ? p.x : 1.0 - p.x;
            const double c = bound.corner_c == 1 ? p.y : 1.0 - p.y;
            arc.push_back(Point2{m, c});
        }
        canvas.polyline(arc, "#7a1fa2", 1.6, /*dashed=*/true);
    }
}

std::string header_comment(const std::vector<std::string>& header) {
    std::string joined;
    for (const std::string& line : header) {
        if (!joined.empty()) joined += "; ";
        joined += line;
    }
    return joined;
}

void write_svg(const fs::path& path, const SvgCanvas& canvas, std::vector<std::string>* files) {
    write_text_file(path.string(), canvas.str());
    files->push_back(path.string());
}

}  // namespace

CommandResult cmd_range(const RunConfig& config) {
    const Workspace ws = open_workspace(config);
    const RangeApproximation approx = compute_range(config, ws.bundle);
    const CornerBounds bounds =
        corner_bounds(ws.decomp, ws.pair, ws.bundle.dual);
    const SOperatorSpectrum spectrum = s_spectrum(ws.bundle);
    const auto scatter = eigenvector_scatter(ws.bundle, spectrum);
    const RotatedOperator rot = rotated(ws.bundle, config.theta);
    const auto rot_scatter = eigenvector_scatter(ws.bundle, rot);

    CommandResult result;
    std::ostringstream summary;
    summary << "K=" << approx.angles.size() << " area_gap=" << format_full(approx.area_gap)
            << " sigma1=" << format_full(spectrum.sigma[0]);
    result.summary = summary.str();

    if (wants(config, "json")) {
        nlohmann::json j = range_to_json(approx, bounds);
        j["meta"] = {{"header", ws.header}, {"theta", config.theta}};
        const fs::path path = ws.out / "range.json";
        write_text_file(path.string(), j.dump(2) + "\n");
        result.files.push_back(path.string());
    }
    if (wants(config, "csv")) {
        const fs::path path = ws.out / "boundary.csv";
        write_text_file(path.string(), boundary_csv(approx, ws.header));
        result.files.push_back(path.string());

        const fs::path spath = ws.out / "scatter.csv";
        write_text_file(spath.string(), scatter_csv(scatter, ws.header));
        result.files.push_back(spath.string());
    }
    if (wants(config, "svg")) {
        SvgCanvas canvas(-0.05, -0.05, 1.05, 1.05);
        canvas.comment(header_comment(ws.header));
        canvas.axes("m", "c");
        canvas.polygon(approx.outer, "#c62828", "#ef9a9a", 1.6, 0.18);
        canvas.polygon(approx.inner, "#1565c0", "#90caf9", 1.6, 0.30);
        draw_gamma_arcs(canvas, bounds);
        for (const ScatterPoint& p : scatter) {
            canvas.circle(Point2{p.point.m, p.point.c}, 2.2, "#111111");
        }
        if (!scatter.empty()) {
            canvas.circle(Point2{scatter[0].point.m, scatter[0].point.c}, 5.5, "none", "#111111",
                          1.6);
        }
        for (const ScatterPoint& p : rot_scatter) {
            canvas.circle(Point2{p.point.m, p.point.c}, 1.6, "#8d6e63");
        }
        write_svg(ws.out / "range.svg", canvas, &result.files);
    }
    return result;
}

CommandResult cmd_spectrum(const RunConfig& config) {
    const Workspace ws = open_workspace(config, /*need_pair=*/false);
    const std::array<PairKind, 4> kinds{
        PairKind::projection_projection, PairKind::distance_projection,
        PairKind::modified_distance_projection, PairKind::distance_laplace};

    std::vector<std::string> names;
    std::vector<Eigen::VectorXd> sigma_columns;
    std::vector<Eigen::VectorXd> rho_columns;
    for (PairKind kind : kinds) {
        PairSpec spec = config.pair;
        spec.kind = kind;
        const FilterPair pair = build_pair(spec, ws.loaded, ws.loaded.graph, ws.decomp);
        const OperatorBundle bundle = build_bundle(ws.decomp, pair);
        sigma_columns.push_back(s_spectrum(bundle).sigma);
        rho_columns.push_back(rotated(bundle, config.theta).rho);
        names.push_back(to_string(kind));
    }

    CommandResult result;
    std::vector<std::string> header = ws.header;
    header.push_back("theta=" + format_full(config.theta));

    if (wants(config, "csv")) {
        std::vector<std::string> columns;
        std::vector<Eigen::VectorXd> data;
        for (std::size_t i = 0; i < names.size(); ++i) {
            columns.push_back("sigma:" + names[i]);
            data.push_back(sigma_columns[i]);
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            columns.push_back("rho:" + names[i]);
            data.push_back(rho_columns[i]);
        }
        const fs::path path = ws.out / "spectrum.csv";
        write_text_file(path.string(), decay_csv(columns, data, header));
        result.files.push_back(path.string());
    }
    if (wants(config, "svg")) {
        const int n = ws.loaded.graph.n;
        double lo = 0.0, hi = 1.0;
        for (const auto& col : rho_columns) {
            lo = std::min(lo, col.minCoeff());
            hi = std::max(hi, col.maxCoeff());
        }
        SvgCanvas canvas(1.0, lo, static_cast<double>(n), hi, 720, 480);
        canvas.comment(header_comment(header));
        canvas.axes("k", "eigenvalue");
        const std::array<std::string, 4> palette{"#1565c0", "#c62828", "#2e7d32", "#6a1b9a"};
        for (std::size_t i = 0; i < sigma_columns.size(); ++i) {
            std::vector<Point2> pts;
            for (int k = 0; k < sigma_columns[i].size(); ++k) {
                pts.push_back(Point2{static_cast<double>(k + 1), sigma_columns[i][k]});
            }
            canvas.polyline(pts, palette[i], 1.4);
        }
        for (std::size_t i = 0; i < rho_columns.size(); ++i) {
            std::vector<Point2> pts;
            for (int k = 0; k < rho_columns[i].size(); ++k) {
                pts.push_back(Point2{static_cast<double>(k + 1), rho_columns[i][k]});
            }
            canvas.polyline(pts, palette[i], 1.0, /*dashed=*/true);
        }
        write_svg(ws.out / "spectrum.svg", canvas, &result.files);
    }

    std::ostringstream summary;
    summary << "pairs=4 n=" << ws.loaded.graph.n;
    result.summary = summary.str();
    return result;
}

CommandResult cmd_eigvec(const RunConfig& config, int k) {
    const Workspace ws = open_workspace(config);
    const int n = ws.loaded.graph.n;
    if (k < 1 || k > n) {
        throw validation_error("eigenvector index k = " + std::to_string(k) +
                               " out of range 1.." + std::to_string(n));
    }
    const SOperatorSpectrum spectrum = s_spectrum(ws.bundle);
    const Signal psi = spectrum.Psi.col(k - 1);
    const SpectralSignal coeffs = gft(ws.decomp, psi);

    CommandResult result;
    std::vector<std::string> header = ws.header;
    header.push_back("k=" + std::to_string(k));

    if (wants(config, "csv")) {
        std::ostringstream out;
        for (const std::string& line : header) out << "# " << line << "\n";
        out << "# k,psi_k_entry,fourier_coefficient\n";
        for (int i = 0; i < n; ++i) {
            out << (i + 1) << "," << format_full(psi[i]) << "," << format_full(coeffs[i]) << "\n";
        }
        const fs::path path = ws.out / "eigvec.csv";
        write_text_file(path.string(), out.str());
        result.files.push_back(path.string());
    }
    if (wants(config, "svg")) {
        if (ws.loaded.points && ws.loaded.points->cols() >= 2) {
            const PointCloud& pts = *ws.loaded.points;
            SvgCanvas canvas(pts.col(0).minCoeff(), pts.col(1).minCoeff(), pts.col(0).maxCoeff(),
                             pts.col(1).maxCoeff());
            canvas.comment(header_comment(header));
            const double amp = std::max(std::abs(psi.minCoeff()), std::abs(psi.maxCoeff()));
            for (int i = 0; i < n; ++i) {
                canvas.circle(Point2{pts(i, 0), pts(i, 1)}, 3.0,
                              diverging_color(psi[i], -amp, amp), "#555555", 0.4);
            }
            write_svg(ws.out / "eigvec.svg", canvas, &result.files);
        }
        // Fourier magnitude bars
        SvgCanvas bars(1.0, 0.0, static_cast<double>(n), std::max(1e-12, coeffs.cwiseAbs().maxCoeff()),
                       720, 360);
        bars.comment(header_comment(header));
        bars.axes("frequency index", "|coefficient|");
        for (int i = 0; i < n; ++i) {
            bars.line(Point2{static_cast<double>(i + 1), 0.0},
                      Point2{static_cast<double>(i + 1), std::abs(coeffs[i])}, "#1565c0", 1.2);
        }
        write_svg(ws.out / "eigvec_coeffs.svg", bars, &result.files);
    }

    const LocalizationPoint p = mean_values(ws.bundle, psi);
    std::ostringstream summary;
    summary << "k=" << k << " m=" << format_full(p.m) << " c=" << format_full(p.c);
    result.summary = summary.str();
    return result;
}

CommandResult cmd_verify(const RunConfig& config) {
    const Workspace ws = open_workspace(config);
    const CornerBounds bounds = corner_bounds(ws.decomp, ws.pair, ws.bundle.dual);
    VerifyOptions options;
    options.theta = config.theta;
    const std::vector<CheckResult> checks = run_invariant_suite(ws.bundle, bounds, options);

    nlohmann::json report = checks_to_json(checks);
    report["meta"] = {{"header", ws.header}};
    const fs::path path = ws.out / "verify.json";
    write_text_file(path.string(), report.dump(2) + "\n");

    CommandResult result;
    result.files.push_back(path.string());
    result.pass = all_pass(checks);
    std::ostringstream summary;
    for (const CheckResult& check : checks) {
        summary << (check.pass ? "PASS " : "FAIL ") << check.name << "\n";
    }
    result.summary = summary.str();
    return result;
}

CommandResult cmd_graph(const RunConfig& config) {
    const Workspace ws = open_workspace(config, /*need_pair=*/false);
    const Graph& g = ws.loaded.graph;

    CommandResult result;
    const fs::path epath = ws.out / "graph_edges.txt";
    write_edge_list(epath.string(), g, ws.header);
    result.files.push_back(epath.string());
    if (ws.loaded.points) {
        const fs::path ppath = ws.out / "graph_points.csv";
        write_point_cloud(ppath.string(), *ws.loaded.points, ws.header);
        result.files.push_back(ppath.string());
    }

    const Eigen::VectorXd deg = degrees(g);
    nlohmann::json stats;
    stats["nodes"] = g.n;
    stats["edges"] = edge_count(g);
    stats["connected"] = is_connected(g);
    stats["min_degree"] = deg.minCoeff();
    stats["max_degree"] = deg.maxCoeff();
    stats["lambda_min"] = ws.decomp.values.minCoeff();
    stats["lambda_max"] = ws.decomp.values.maxCoeff();
    stats["meta"] = {{"header", ws.header}};
    const fs::path spath = ws.out / "graph_stats.json";
    write_text_file(spath.string(), stats.dump(2) + "\n");
    result.files.push_back(spath.string());

    std::ostringstream summary;
    summary << "n=" << g.n << " edges=" << edge_count(g)
            << " connected=" << (is_connected(g) ? "yes" : "no");
    result.summary = summary.str();
    return result;
}

}  // namespace specrange
