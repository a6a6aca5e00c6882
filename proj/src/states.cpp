#include "avqst/states.hpp"

#include "avqst/errors.hpp"

#include <cmath>
#include <string>

namespace avqst {

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 2) {
        throw ValidationError("DensityMatrix: matrix must be square with dim >= 2");
    }
    if (mat_.rows() > kMaxDim) {
        throw CapacityError("DensityMatrix: dimension exceeds 2^8");
    }
    const double herm = hermiticity_defect(mat_);
    if (herm > kStateTol) {
        throw ValidationError("DensityMatrix: Hermiticity defect " + std::to_string(herm));
    }
    const double trace_err = std::abs(mat_.trace() - Complex(1.0, 0.0));
    if (trace_err > kStateTol) {
        throw ValidationError("DensityMatrix: trace deviates from 1 by " + std::to_string(trace_err));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("DensityMatrix: eigenvalue check did not converge");
    }
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -kStateTol) {
        throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim < 2) {
        throw ValidationError("maximally_mixed: dim must be >= 2");
    }
    ComplexMatrix m = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("DensityMatrix::min_eigenvalue: solver did not converge");
    }
    return solver.eigenvalues().minCoeff();
}

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw ValidationError("PureState: dim must be >= 2");
    }
    const double norm_dev = std::abs(amps_.norm() - 1.0);
    if (norm_dev > 1e-12) {
        throw ValidationError("PureState: norm deviates from 1 by " + std::to_string(norm_dev));
    }
}

DensityMatrix project_to_density(const ComplexMatrix& h) {
    const HermitianEigen eig = hermitian_eigen(h);
    const RealVector projected = project_to_simplex(eig.eigenvalues);
    ComplexMatrix out = eig.eigenvectors * projected.asDiagonal() * eig.eigenvectors.adjoint();
    // Symmetrize away round-off so the result passes the Hermiticity check.
    out = 0.5 * (out + out.adjoint().eval());
    return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw ValidationError("trace_distance: dimension mismatch");
    }
    const HermitianEigen eig = hermitian_eigen(rho.matrix() - sigma.matrix());
    const double dist = 0.5 * eig.eigenvalues.cwiseAbs().sum();
    return std::min(std::max(dist, 0.0), 1.0);
}

DensityMatrix mix_with_identity(const DensityMatrix& rho, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ValidationError("mix_with_identity: gamma must lie in [0,1]");
    }
    const Eigen::Index d = rho.dim();
    ComplexMatrix m = (1.0 - gamma) * rho.matrix() +
                      (gamma / static_cast<double>(d)) * ComplexMatrix::Identity(d, d);
    return DensityMatrix(std::move(m));
}

} // namespace avqst
