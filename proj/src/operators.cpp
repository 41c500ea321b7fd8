#include "specrange/operators.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

constexpr double kRangeTol = 1e-12;
constexpr double kDualPsdTol = 1e-9;

void check_unit_range(const Eigen::VectorXd& v, const char* what) {
    for (int i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]) || v[i] < -kRangeTol || v[i] > 1.0 + kRangeTol) {
            throw validation_error(std::string(what) + " entry " + std::to_string(i) +
                                   " outside [0, 1]");
        }
    }
}

Eigen::MatrixXd synthesize(const Eigen::MatrixXd& u, const Eigen::VectorXd& coeffs) {
    Eigen::MatrixXd m = u * coeffs.asDiagonal() * u.transpose();
    return 0.5 * (m + m.transpose());
}

OperatorBundle assemble(const EigenDecomposition& decomp, const FilterPair& pair,
                        Eigen::VectorXd coeffs, bool dual) {
    const int n = decomp.n();
    if (pair.spatial.f.size() != n || coeffs.size() != n) {
        throw validation_error("filter pair dimension does not match the eigendecomposition");
    }
    check_unit_range(pair.spatial.f, "spatial filter");

    OperatorBundle bundle;
    bundle.mf_diag = pair.spatial.f.cwiseMax(0.0).cwiseMin(1.0);
    bundle.Cg = synthesize(decomp.vectors, coeffs);
    bundle.Cg_half = synthesize(decomp.vectors, coeffs.cwiseMax(0.0).cwiseSqrt());
    bundle.S = bundle.Cg_half * bundle.mf_diag.asDiagonal() * bundle.Cg_half;
    bundle.S = 0.5 * (bundle.S + bundle.S.transpose());
    bundle.conv_coeffs = std::move(coeffs);
    bundle.decomp = decomp;
    bundle.pair = pair;
    bundle.dual = dual;
    return bundle;
}

double squared_norm_or_throw(const Signal& x) {
    const double nsq = x.squaredNorm();
    if (!(nsq > 0.0) || !x.allFinite()) throw validation_error("signal must be nonzero and finite");
    return nsq;
}

double spectral_norm_sym(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()));
    if (solver.info() != Eigen::Success) throw numerical_error("spectral norm solve failed");
    return std::max(std::abs(solver.eigenvalues().minCoeff()),
                    std::abs(solver.eigenvalues().maxCoeff()));
}

// ||A||^2 as the top eigenvalue of A^T A.
double spectral_norm_squared(const Eigen::MatrixXd& a) {
    return spectral_norm_sym(a.transpose() * a);
}

}  // namespace

double Sigma1Characterizations::spread() const {
    const double lo = std::min(std::min(s_norm, mc_norm_sq), std::min(cm_norm_sq, mcm_norm));
    const double hi = std::max(std::max(s_norm, mc_norm_sq), std::max(cm_norm_sq, mcm_norm));
    return hi - lo;
}

OperatorBundle build_bundle(const EigenDecomposition& decomp, const FilterPair& pair) {
    check_unit_range(pair.spectral.ghat, "spectral filter");
    return assemble(decomp, pair, pair.spectral.ghat, /*dual=*/false);
}

OperatorBundle dual_bundle(const EigenDecomposition& decomp, const FilterPair& pair) {
    check_unit_range(pair.spectral.ghat, "spectral filter");
    Eigen::VectorXd coeffs = decomp.vectors.transpose() * pair.spectral.ghat;
    const double worst = coeffs.minCoeff();
    if (worst < -kDualPsdTol) {
        throw numerical_error(
            "dual convolution filter has negative transform coefficients (min " +
            std::to_string(worst) + "); the dual C_g is not positive semidefinite");
    }
    for (int i = 0; i < coeffs.size(); ++i) coeffs[i] = std::max(coeffs[i], 0.0);
    return assemble(decomp, pair, std::move(coeffs), /*dual=*/true);
}

LocalizationPoint mean_values(const OperatorBundle& bundle, const Signal& x) {
    const double nsq = squared_norm_or_throw(x);
    const double m = x.cwiseProduct(bundle.mf_diag).dot(x) / nsq;
    const double c = x.dot(bundle.Cg * x) / nsq;
    return LocalizationPoint{m, c};
}

double s_mean(const OperatorBundle& bundle, const Signal& x) {
    const double nsq = squared_norm_or_throw(x);
    return x.dot(bundle.S * x) / nsq;
}

double r_mean(const RotatedOperator& rot, const Signal& x) {
    const double nsq = squared_norm_or_throw(x);
    return x.dot(rot.R * x) / nsq;
}

Sigma1Characterizations sigma1_characterizations(const OperatorBundle& bundle) {
    const Eigen::VectorXd f_half = bundle.mf_diag.cwiseSqrt();
    const Eigen::MatrixXd mc = f_half.asDiagonal() * bundle.Cg_half;
    const Eigen::MatrixXd cm = bundle.Cg_half * Eigen::MatrixXd(f_half.asDiagonal());
    const Eigen::MatrixXd mcm = f_half.asDiagonal() * bundle.Cg * f_half.asDiagonal();

    Sigma1Characterizations result;
    result.s_norm = spectral_norm_sym(bundle.S);
    result.mc_norm_sq = spectral_norm_squared(mc);
    result.cm_norm_sq = spectral_norm_squared(cm);
    result.mcm_norm = spectral_norm_sym(mcm);
    return result;
}

RotatedOperator rotated(const OperatorBundle& bundle, double theta) {
    RotatedOperator rot;
    rot.theta = theta;
    rot.R = std::cos(theta) * Eigen::MatrixXd(bundle.mf_diag.asDiagonal()) +
            std::sin(theta) * bundle.Cg;
    const EigenDecomposition decomp = eig_sym(rot.R);
    rot.rho = decomp.values.reverse();
    rot.Phi = decomp.vectors.rowwise().reverse();
    return rot;
}

SOperatorSpectrum s_spectrum(const OperatorBundle& bundle) {
    const EigenDecomposition decomp = eig_sym(bundle.S);
    return SOperatorSpectrum{decomp.values.reverse(), decomp.vectors.rowwise().reverse()};
}

std::pair<double, double> variances(const OperatorBundle& bundle, const RotatedOperator& rot,
                                    const Signal& x) {
    const double nsq = squared_norm_or_throw(x);
    const double sbar = x.dot(bundle.S * x) / nsq;
    const double rbar = x.dot(rot.R * x) / nsq;
    const double var_s = (bundle.S * x - sbar * x).squaredNorm() / nsq;
    const double var_r = (rot.R * x - rbar * x).squaredNorm() / nsq;
    return {var_s, var_r};
}

}  // namespace specrange
