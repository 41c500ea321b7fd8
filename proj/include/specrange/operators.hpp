#pragma once

#include <Eigen/Core>
#include <utility>

#include "specrange/filters.hpp"
#include "specrange/spectral.hpp"

namespace specrange {

/// A localization point (m_f(x), c_g(x)) in the admissibility square.
struct LocalizationPoint {
    double m = 0.0;
    double c = 0.0;
};

/// Materialized localization operators for one filter pair:
/// M_f = diag(f), C_g = U diag(ghat) U^T, S = C_{g^{1/2}} M_f C_{g^{1/2}}.
/// `conv_coeffs` holds the eigenvalues of C_g in transform order (equal to
/// ghat for graph-domain bundles, U^T ghat for spectral-domain ones).
struct OperatorBundle {
    Eigen::VectorXd mf_diag;
    Eigen::MatrixXd Cg;
    Eigen::MatrixXd Cg_half;
    Eigen::MatrixXd S;
    Eigen::VectorXd conv_coeffs;
    EigenDecomposition decomp;
    FilterPair pair;
    bool dual = false;

    int n() const { return static_cast<int>(mf_diag.size()); }
    Eigen::MatrixXd Mf() const { return Eigen::MatrixXd(mf_diag.asDiagonal()); }
};

/// R^(theta) = cos(theta) M_f + sin(theta) C_g with its full spectrum,
/// eigenvalues descending.
struct RotatedOperator {
    double theta = 0.0;
    Eigen::MatrixXd R;
    Eigen::VectorXd rho;
    Eigen::MatrixXd Phi;
};

/// Spectrum of S, eigenvalues descending in [0, 1].
struct SOperatorSpectrum {
    Eigen::VectorXd sigma;
    Eigen::MatrixXd Psi;
};

/// The four operator-norm characterizations of sigma_1.
struct Sigma1Characterizations {
    double s_norm = 0.0;       // ||S||
    double mc_norm_sq = 0.0;   // ||M_{f^{1/2}} C_{g^{1/2}}||^2
    double cm_norm_sq = 0.0;   // ||C_{g^{1/2}} M_{f^{1/2}}||^2
    double mcm_norm = 0.0;     // ||M_{f^{1/2}} C_g M_{f^{1/2}}||
    double spread() const;
};

/// Build the operators over the graph domain. Filters must lie in [0, 1];
/// the sup-norm requirement is not enforced here so reflected filters can be
/// bundled for the corner bounds.
OperatorBundle build_bundle(const EigenDecomposition& decomp, const FilterPair& pair);

/// Spectral-domain variant: operands are distributions on the spectrum. The
/// multiplication filter is applied verbatim and the convolution filter is
/// first analyzed, giving C = U diag(U^T ghat) U^T. Negative transform
/// coefficients beyond 1e-9 make the dual C indefinite and are reported as a
/// numerical_error rather than clamped.
OperatorBundle dual_bundle(const EigenDecomposition& decomp, const FilterPair& pair);

LocalizationPoint mean_values(const OperatorBundle& bundle, const Signal& x);

double s_mean(const OperatorBundle& bundle, const Signal& x);
double r_mean(const RotatedOperator& rot, const Signal& x);

Sigma1Characterizations sigma1_characterizations(const OperatorBundle& bundle);

RotatedOperator rotated(const OperatorBundle& bundle, double theta);

SOperatorSpectrum s_spectrum(const OperatorBundle& bundle);

/// (var_S(x), var_R(x)).
std::pair<double, double> variances(const OperatorBundle& bundle, const RotatedOperator& rot,
                                    const Signal& x);

}  // namespace specrange
