#pragma once

#include <string>
#include <vector>

#include "specrange/config.hpp"

namespace specrange {

/// Outcome of one CLI command: files written plus a machine-readable summary.
struct CommandResult {
    std::vector<std::string> files;
    bool pass = true;
    std::string summary;
};

/// Range computation: polygons JSON, boundary CSV, SVG overlay with the
/// gamma-curve arcs and the eigenvector scatter.
CommandResult cmd_range(const RunConfig& config);

/// Eigenvalue decay of S and R^(theta) across the four standard pairs:
/// CSV table plus an SVG line plot.
CommandResult cmd_spectrum(const RunConfig& config);

/// Node-colored eigenvector plot plus Fourier-coefficient magnitudes.
CommandResult cmd_eigvec(const RunConfig& config, int k);

/// Invariant suite; `pass` mirrors the JSON report.
CommandResult cmd_verify(const RunConfig& config);

/// Build/inspect a graph: writes the edge list (and points for synthetic
/// sources) plus a stats JSON.
CommandResult cmd_graph(const RunConfig& config);

}  // namespace specrange
