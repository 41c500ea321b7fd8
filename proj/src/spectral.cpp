#include "specrange/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

void check_finite(const Eigen::VectorXd& v, const char* what) {
    if (!v.allFinite()) throw validation_error(std::string(what) + " has nonfinite entries");
}

void check_dim(const EigenDecomposition& decomp, const Eigen::VectorXd& v, const char* what) {
    if (v.size() != decomp.n()) {
        throw validation_error(std::string(what) + " has dimension " + std::to_string(v.size()) +
                               ", expected " + std::to_string(decomp.n()));
    }
}

void fix_signs(Eigen::MatrixXd& vectors) {
    for (int k = 0; k < vectors.cols(); ++k) {
        for (int i = 0; i < vectors.rows(); ++i) {
            const double v = vectors(i, k);
            if (std::abs(v) > 1e-12) {
                if (v < 0.0) vectors.col(k) = -vectors.col(k);
                break;
            }
        }
    }
}

}  // namespace

EigenDecomposition eig_sym(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols()) throw validation_error("eig_sym: matrix must be square");
    const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw validation_error("eig_sym: matrix asymmetry " + std::to_string(asym) +
                               " exceeds 1e-10");
    }
    const Eigen::MatrixXd sym = 0.5 * (matrix + matrix.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw numerical_error("eig_sym: eigensolver failed to converge");
    }
    EigenDecomposition decomp{solver.eigenvalues(), solver.eigenvectors()};
    fix_signs(decomp.vectors);
    return decomp;
}

EigenDecomposition decomposition_from_parts(Eigen::VectorXd values, Eigen::MatrixXd vectors) {
    if (vectors.rows() != vectors.cols() || values.size() != vectors.rows()) {
        throw validation_error("decomposition_from_parts: inconsistent dimensions");
    }
    const int n = static_cast<int>(values.size());
    for (int k = 1; k < n; ++k) {
        if (values[k] < values[k - 1] - 1e-9) {
            throw validation_error("decomposition_from_parts: eigenvalues must ascend");
        }
    }
    const double ortho =
        (vectors.transpose() * vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho > 1e-9) {
        throw validation_error("decomposition_from_parts: basis not orthonormal (residual " +
                               std::to_string(ortho) + ")");
    }
    return EigenDecomposition{std::move(values), std::move(vectors)};
}

SpectralSignal gft(const EigenDecomposition& decomp, const Signal& x) {
    check_dim(decomp, x, "signal");
    check_finite(x, "signal");
    return decomp.vectors.transpose() * x;
}

Signal igft(const EigenDecomposition& decomp, const SpectralSignal& xhat) {
    check_dim(decomp, xhat, "spectral signal");
    check_finite(xhat, "spectral signal");
    return decomp.vectors * xhat;
}

Signal convolve(const EigenDecomposition& decomp, const Signal& x, const Signal& y) {
    check_dim(decomp, x, "signal x");
    check_dim(decomp, y, "signal y");
    const SpectralSignal prod =
        (decomp.vectors.transpose() * x).cwiseProduct(decomp.vectors.transpose() * y);
    return decomp.vectors * prod;
}

}  // namespace specrange
