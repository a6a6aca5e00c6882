#pragma once

#include "avqst/linalg.hpp"

namespace avqst {

/*
 * D x D complex density matrix: Hermitian, unit trace, positive semidefinite.
 * All three invariants are checked on construction (tolerance 1e-10), so a
 * DensityMatrix value is always a valid quantum state. Immutable.
 */
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix maximally_mixed(Eigen::Index dim);

    const ComplexMatrix& matrix() const noexcept { return mat_; }
    Eigen::Index dim() const noexcept { return mat_.rows(); }

    double purity() const { return (mat_ * mat_).trace().real(); }

    // Smallest eigenvalue; used by callers that need strict positive definiteness.
    double min_eigenvalue() const;

    bool operator==(const DensityMatrix& other) const { return mat_ == other.mat_; }

private:
    ComplexMatrix mat_;
};

/*
 * Unit-norm state vector on C^D (norm checked to 1e-12). Immutable.
 */
class PureState {
public:
    explicit PureState(ComplexVector amplitudes);

    const ComplexVector& amplitudes() const noexcept { return amps_; }
    Eigen::Index dim() const noexcept { return amps_.size(); }

    ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }
    DensityMatrix density() const { return DensityMatrix(projector()); }

private:
    ComplexVector amps_;
};

// Closest density matrix in Frobenius norm: eigenvalues projected onto the
// probability simplex, eigenvectors unchanged. Idempotent.
DensityMatrix project_to_density(const ComplexMatrix& h);

// (1/2) sum |eig(rho - sigma)|, clamped into [0,1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// (1-gamma) rho + gamma I/D. Guarantees min eigenvalue >= gamma/D (up to 1e-12),
// which keeps predicted outcome probabilities strictly positive.
DensityMatrix mix_with_identity(const DensityMatrix& rho, double gamma);

} // namespace avqst
