// Command-line front end: range, spectrum, eigvec, verify, graph.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "specrange/commands.hpp"
#include "specrange/errors.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string graph;
    std::string basis;
    std::string pair;
    std::string angles;
    double theta = -1.0;
    std::string out;
    std::string formats;
    int k = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "config file (flat key-value with sections)");
    cmd->add_option("--graph", flags.graph, "point-cloud CSV, edge list, or sensor:n,R,seed");
    cmd->add_option("--basis", flags.basis, "pinned eigenbasis CSV (orthonormal columns)");
    cmd->add_option("--pair", flags.pair, "filter pair spec, e.g. distance-projection:center=3,N=100");
    cmd->add_option("--angles", flags.angles, "uniform:K or adaptive:tol,Kmax");
    cmd->add_option("--theta", flags.theta, "rotation angle for R-operator analyses (radians)");
    cmd->add_option("--out", flags.out, "output directory");
    cmd->add_option("--format", flags.formats, "comma-separated subset of svg,csv,json");
}

specrange::RunConfig resolve(const CommonFlags& flags) {
    specrange::RunConfig config;
    if (!flags.config_path.empty()) config = specrange::parse_config_file(flags.config_path);
    if (!flags.graph.empty()) config.graph = specrange::parse_graph_source(flags.graph);
    if (!flags.basis.empty()) config.basis_path = flags.basis;
    if (!flags.pair.empty()) config.pair = specrange::parse_pair_spec(flags.pair);
    if (!flags.angles.empty()) config.angles = specrange::parse_angle_spec(flags.angles);
    if (flags.theta >= 0.0) config.theta = flags.theta;
    if (!flags.out.empty()) config.out_dir = flags.out;
    if (!flags.formats.empty()) {
        config.formats.clear();
        std::string token;
        for (char c : flags.formats + ",") {
            if (c == ',') {
                if (!token.empty()) config.formats.push_back(token);
                token.clear();
            } else {
                token += c;
            }
        }
    }
    if (flags.k > 0) config.eigvec_index = flags.k;
    return config;
}

void report(const specrange::CommandResult& result) {
    if (!result.summary.empty()) std::cout << result.summary << "\n";
    for (const std::string& file : result.files) std::cout << "wrote " << file << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical ranges and uncertainty regions for graph space-frequency filters"};
    app.require_subcommand(1);

    CommonFlags flags;
    CLI::App* range = app.add_subcommand("range", "compute the polygon sandwich of the range");
    add_common(range, flags);
    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue decay of S and R(theta)");
    add_common(spectrum, flags);
    CLI::App* eigvec = app.add_subcommand("eigvec", "plot one eigenvector of S");
    add_common(eigvec, flags);
    eigvec->add_option("-k,--index", flags.k, "eigenvector index (1-based)");
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, flags);
    CLI::App* graph = app.add_subcommand("graph", "build/inspect a graph");
    add_common(graph, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        const specrange::RunConfig config = resolve(flags);
        specrange::CommandResult result;
        if (range->parsed()) result = specrange::cmd_range(config);
        else if (spectrum->parsed()) result = specrange::cmd_spectrum(config);
        else if (eigvec->parsed()) result = specrange::cmd_eigvec(config, config.eigvec_index);
        else if (verify->parsed()) result = specrange::cmd_verify(config);
        else if (graph->parsed()) result = specrange::cmd_graph(config);
        report(result);
        return result.pass ? 0 : 1;
    } catch (const specrange::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const specrange::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const specrange::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
