#pragma once

#include <Eigen/Core>
#include <vector>

#include "specrange/operators.hpp"

namespace specrange {

/// Descending eigenpairs of S or R^(theta); both truncation variants share
/// this view.
struct OperatorSpectrumView {
    const Eigen::VectorXd& values;
    const Eigen::MatrixXd& vectors;

    OperatorSpectrumView(const Eigen::VectorXd& vals, const Eigen::MatrixXd& vecs)
        : values(vals), vectors(vecs) {}
    OperatorSpectrumView(const SOperatorSpectrum& s) : values(s.sigma), vectors(s.Psi) {}
    OperatorSpectrumView(const RotatedOperator& r) : values(r.rho), vectors(r.Phi) {}
};

struct ExpansionReport {
    std::vector<int> kept;  // 0-based indices into the descending spectrum
    Signal reconstruction;
    double actual_error_sq = 0.0;
    double bound = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};

/// Keep eigenvectors with eigenvalue >= s (ties kept); Markov-style bound
/// (top - mean)/(top - s) * ||x||^2. Requires s < top eigenvalue.
ExpansionReport truncate_by_threshold(const OperatorSpectrumView& spectrum, const Signal& x,
                                      double s);

/// Keep eigenvectors with eigenvalue in [mean - a, mean + a]; Chebyshev-style
/// bound variance/a^2 * ||x||^2. Requires a > 0.
ExpansionReport truncate_by_interval(const OperatorSpectrumView& spectrum, const Signal& x,
                                     double a);

/// mu_k(x) = (psi_k^T x)^2 for unit x; other signals are normalized first and
/// flagged.
struct SpectralDistribution {
    Eigen::VectorXd mu;
    bool input_was_normalized = true;
};

SpectralDistribution spectral_distribution(const OperatorSpectrumView& spectrum, const Signal& x);

}  // namespace specrange
