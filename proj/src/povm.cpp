#include "avqst/povm.hpp"

#include "avqst/errors.hpp"

#include <cmath>

namespace avqst {

std::vector<PovmViolation> validate_povm(Eigen::Index dim, const std::vector<ComplexMatrix>& effects) {
    std::vector<PovmViolation> violations;
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (std::size_t x = 0; x < effects.size(); ++x) {
        const ComplexMatrix& e = effects[x];
        const int idx = static_cast<int>(x);
        if (e.rows() != dim || e.cols() != dim) {
            violations.push_back({PovmViolation::Kind::Hermiticity, idx, 0.0,
                                  "effect " + std::to_string(x) + " has wrong shape"});
            continue;
        }
        const double herm = hermiticity_defect(e);
        if (herm > kStateTol) {
            violations.push_back({PovmViolation::Kind::Hermiticity, idx, herm,
                                  "effect " + std::to_string(x) + " Hermiticity defect " +
                                      std::to_string(herm)});
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (e + e.adjoint().eval()),
                                                            Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        if (min_eig < -kStateTol) {
            violations.push_back({PovmViolation::Kind::Psd, idx, -min_eig,
                                  "effect " + std::to_string(x) + " has negative eigenvalue " +
                                      std::to_string(min_eig)});
        }
        sum += e;
    }
    const double completeness = max_abs(sum - ComplexMatrix::Identity(dim, dim));
    if (completeness > kStateTol) {
        violations.push_back({PovmViolation::Kind::Completeness, -1, completeness,
                              "effects sum deviates from identity by " + std::to_string(completeness)});
    }
    return violations;
}

std::vector<PovmViolation> validate_povm(const Povm& povm) {
    return validate_povm(povm.dim(), povm.effects());
}

Povm::Povm(Eigen::Index dim, std::vector<ComplexMatrix> effects)
    : dim_(dim), effects_(std::move(effects)) {
    if (dim_ < 2) {
        throw ValidationError("Povm: dim must be >= 2");
    }
    if (dim_ > kMaxDim) {
        throw CapacityError("Povm: dimension exceeds 2^8");
    }
    if (effects_.empty()) {
        throw ValidationError("Povm: effect list is empty");
    }
    const auto violations = validate_povm(dim_, effects_);
    if (!violations.empty()) {
        throw ValidationError("Povm: " + violations.front().message);
    }
}

Povm qubit_sic_povm() {
    const double s23 = std::sqrt(2.0 / 3.0);
    const double s2 = std::sqrt(2.0);
    const double bloch[4][3] = {
        {0.0, 0.0, 1.0},
        {2.0 * s2 / 3.0, 0.0, -1.0 / 3.0},
        {-s2 / 3.0, s23, -1.0 / 3.0},
        {-s2 / 3.0, -s23, -1.0 / 3.0},
    };
    std::vector<ComplexMatrix> effects;
    effects.reserve(4);
    for (const auto& v : bloch) {
        ComplexMatrix e(2, 2);
        e(0, 0) = Complex(0.25 * (1.0 + v[2]), 0.0);
        e(1, 1) = Complex(0.25 * (1.0 - v[2]), 0.0);
        e(0, 1) = Complex(0.25 * v[0], -0.25 * v[1]);
        e(1, 0) = Complex(0.25 * v[0], 0.25 * v[1]);
        effects.push_back(std::move(e));
    }
    return Povm(2, std::move(effects));
}

Povm product_povm(const Povm& base, int copies) {
    if (copies < 1) {
        throw ValidationError("product_povm: copies must be >= 1");
    }
    Eigen::Index joint_dim = 1;
    for (int k = 0; k < copies; ++k) {
        joint_dim *= base.dim();
        if (joint_dim > kMaxDim) {
            throw CapacityError("product_povm: joint dimension exceeds 2^8");
        }
    }
    if (copies == 1) {
        return base;
    }
    const int m = base.size();
    std::size_t joint_count = 1;
    for (int k = 0; k < copies; ++k) {
        joint_count *= static_cast<std::size_t>(m);
    }
    std::vector<ComplexMatrix> effects;
    effects.reserve(joint_count);
    for (std::size_t i = 0; i < joint_count; ++i) {
        std::size_t rest = i;
        ComplexMatrix joint = base.effect(static_cast<int>(rest % static_cast<std::size_t>(m)));
        rest /= static_cast<std::size_t>(m);
        for (int k = 1; k < copies; ++k) {
            joint = tensor(joint, base.effect(static_cast<int>(rest % static_cast<std::size_t>(m))));
            rest /= static_cast<std::size_t>(m);
        }
        effects.push_back(std::move(joint));
    }
    return Povm(joint_dim, std::move(effects));
}

RealVector born_probabilities(const DensityMatrix& rho, const Povm& povm) {
    if (rho.dim() != povm.dim()) {
        throw ValidationError("born_probabilities: dimension mismatch");
    }
    const int m = povm.size();
    RealVector p(m);
    for (int x = 0; x < m; ++x) {
        const double px = povm.effect(x).cwiseProduct(rho.matrix().transpose()).sum().real();
        if (px < -1e-12) {
            throw NumericError("born_probabilities: outcome " + std::to_string(x) +
                               " has probability " + std::to_string(px));
        }
        p[x] = std::max(px, 0.0);
    }
    const double total = p.sum();
    if (std::abs(total - 1.0) > kStateTol) {
        throw NumericError("born_probabilities: probabilities sum to " + std::to_string(total));
    }
    p /= total;
    return p;
}

int sample_from_probabilities(const RealVector& probabilities, RngStream& rng) {
    const double u = rng.next_double();
    double cdf = 0.0;
    const int m = static_cast<int>(probabilities.size());
    for (int x = 0; x < m; ++x) {
        cdf += probabilities[x];
        if (u < cdf) {
            return x;
        }
    }
    return m - 1; // u landed in terminal round-off
}

int sample_outcome(const DensityMatrix& rho, const Povm& povm, RngStream& rng) {
    return sample_from_probabilities(born_probabilities(rho, povm), rng);
}

} // namespace avqst
