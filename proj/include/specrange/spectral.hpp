#pragma once

#include <Eigen/Core>

namespace specrange {

using Signal = Eigen::VectorXd;
using SpectralSignal = Eigen::VectorXd;

/// Orthonormal eigendecomposition with ascending eigenvalues; column k of
/// `vectors` pairs with `values[k]`.
struct EigenDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;

    int n() const { return static_cast<int>(values.size()); }
};

/// Dense symmetric eigensolve. The input must be symmetric within 1e-10 and
/// is symmetrized before solving. Eigenvalues ascend; each eigenvector is
/// normalized with its first nonzero component nonnegative so repeated runs
/// are byte-identical.
EigenDecomposition eig_sym(const Eigen::MatrixXd& matrix);

/// Wrap an explicitly given basis (eigenvalues ascending, vectors orthonormal
/// within 1e-9). The basis is taken verbatim; no sign normalization. Used for
/// fixtures whose degenerate eigenspaces need a pinned basis.
EigenDecomposition decomposition_from_parts(Eigen::VectorXd values, Eigen::MatrixXd vectors);

/// Forward transform x_hat = U^T x.
SpectralSignal gft(const EigenDecomposition& decomp, const Signal& x);

/// Inverse transform x = U x_hat.
Signal igft(const EigenDecomposition& decomp, const SpectralSignal& xhat);

/// Graph convolution x * y = U ((U^T x) .* (U^T y)).
Signal convolve(const EigenDecomposition& decomp, const Signal& x, const Signal& y);

}  // namespace specrange
