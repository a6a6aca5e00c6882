#pragma once

#include <Eigen/Dense>
#include <complex>

namespace avqst {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Invariant tolerances: states at 1e-10, eigen reconstruction at 1e-9.
inline constexpr double kStateTol = 1e-10;
inline constexpr double kEigenTol = 1e-9;
inline constexpr double kHermitianInputTol = 1e-8;

// Largest supported Hilbert-space dimension (2^8).
inline constexpr Eigen::Index kMaxDim = 256;

inline double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermiticity_defect(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

struct HermitianEigen {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // columns, matching order
};

// Eigendecomposition of a Hermitian matrix (validated to 1e-8). Satisfies
// H = V diag(lambda) V^dagger to 1e-9 and V unitary to 1e-9.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

// Euclidean projection of a real vector onto the probability simplex.
RealVector project_to_simplex(const RealVector& v);

// Kronecker product, row-major block convention:
// (A (x) B)[i*rb + k, j*cb + l] = A[i,j] * B[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace avqst
