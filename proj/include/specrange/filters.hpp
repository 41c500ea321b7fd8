#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "specrange/graph.hpp"

namespace specrange {

/// Node-domain filter, entries in [0,1] with sup-norm 1. `reflect` output is
/// exempt from the sup-norm requirement.
struct SpatialFilter {
    Eigen::VectorXd f;
};

/// Spectral filter indexed by eigenvalue order, entries in [0,1] with
/// sup-norm 1 (same reflect exemption).
struct SpectralFilter {
    Eigen::VectorXd ghat;
};

enum class PairKind {
    projection_projection,
    distance_projection,
    modified_distance_projection,
    distance_laplace,
    laplace_laplace,
    custom,
};

const char* to_string(PairKind kind);
PairKind pair_kind_from_string(const std::string& name);

struct FilterPair {
    SpatialFilter spatial;
    SpectralFilter spectral;
    PairKind label = PairKind::custom;
};

/// Indicator of a node subset (0-based indices).
SpatialFilter projection_spatial(int n, const std::vector<int>& nodes);

/// Indicator of a frequency subset (1-based indices, matching u_1..u_n).
SpectralFilter projection_spectral(int n, const std::vector<int>& freqs);

/// f(v) = 1 - (d_w(v)/d_w_max)^alpha.
SpatialFilter distance_spatial(const GeodesicProfile& profile, double alpha);

/// ghat_k = 1 - lambda_k/2, eigenvalues clamped to [0,2] first.
SpectralFilter laplace_spectral(const Eigen::VectorXd& lambda);

/// ghat_k = chi_B(k) * (1 - (lambda_k/2)^beta), B 1-based. When 1 is not in
/// B the result is renormalized by its maximum entry.
SpectralFilter smoothed_bandlimit(const Eigen::VectorXd& lambda, const std::vector<int>& freqs,
                                  double beta);

/// Checked construction for custom filter vectors.
SpatialFilter spatial_from_values(Eigen::VectorXd f);
SpectralFilter spectral_from_values(Eigen::VectorXd ghat);

/// Entrywise 1 - value. May violate the sup-norm invariant; used for the
/// reflected corner bounds where only 0 <= value <= 1 is needed.
SpatialFilter reflect(const SpatialFilter& filter);
SpectralFilter reflect(const SpectralFilter& filter);

/// The frequency set {1, ..., N}.
std::vector<int> bandlimit_set(int bandwidth);

/// Report-only validation: range and sup-norm status of both filters and the
/// multiplicity of eigenvalue 1 of M_f and C_g (simplicity feeds the
/// sufficient condition for sigma_1 < 1).
struct PairValidation {
    bool spatial_in_range = false;
    bool spatial_sup_norm_ok = false;
    bool spectral_in_range = false;
    bool spectral_sup_norm_ok = false;
    int mf_one_multiplicity = 0;
    int cg_one_multiplicity = 0;
    std::vector<std::string> messages;

    bool mf_simple() const { return mf_one_multiplicity == 1; }
    bool cg_simple() const { return cg_one_multiplicity == 1; }
    bool ok() const {
        return spatial_in_range && spatial_sup_norm_ok && spectral_in_range && spectral_sup_norm_ok;
    }
};

PairValidation validate(const FilterPair& pair);

}  // namespace specrange
