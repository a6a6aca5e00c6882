#pragma once

#include "avqst/rng.hpp"
#include "avqst/states.hpp"

#include <string>
#include <vector>

namespace avqst {

struct PovmViolation {
    enum class Kind { Hermiticity, Psd, Completeness };
    Kind kind;
    int effect_index; // -1 for completeness
    double magnitude;
    std::string message;
};

// Diagnostic check of a candidate effect list: Hermiticity and PSD per effect
// (tolerance 1e-10), completeness sum_x Pi_x = I (max-abs 1e-10).
std::vector<PovmViolation> validate_povm(Eigen::Index dim, const std::vector<ComplexMatrix>& effects);

/*
 * Positive operator-valued measure: an ordered list of M PSD effects summing
 * to the identity. Validated on construction; immutable afterwards. Outcome
 * indices are 0-based throughout.
 */
class Povm {
public:
    Povm(Eigen::Index dim, std::vector<ComplexMatrix> effects);

    Eigen::Index dim() const noexcept { return dim_; }
    int size() const noexcept { return static_cast<int>(effects_.size()); }
    const ComplexMatrix& effect(int x) const { return effects_.at(static_cast<std::size_t>(x)); }
    const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }

private:
    Eigen::Index dim_;
    std::vector<ComplexMatrix> effects_;
};

std::vector<PovmViolation> validate_povm(const Povm& povm);

// The four-outcome symmetric informationally complete qubit POVM:
// Pi_x = (1/4)(I + v_x . sigma) on the tetrahedral unit Bloch vectors
//   v0 = (0, 0, 1)
//   v1 = (2*sqrt(2)/3, 0, -1/3)
//   v2 = (-sqrt(2)/3,  sqrt(2/3), -1/3)
//   v3 = (-sqrt(2)/3, -sqrt(2/3), -1/3).
Povm qubit_sic_povm();

// m-fold tensor-product POVM. Outcome index encodes the per-copy outcome
// tuple in base-M little-endian order: digit k (weight M^k) is copy k's
// outcome, and copy 0 is the leftmost Kronecker factor, so
//   effect(i) = Pi_{d_0} (x) Pi_{d_1} (x) ... (x) Pi_{d_{m-1}},  d_k = (i / M^k) mod M.
// Throws CapacityError when the joint dimension would exceed 2^8.
Povm product_povm(const Povm& base, int copies);

// Born's rule: p_x = tr(Pi_x rho). Tiny negative round-off (above -1e-12) is
// clamped to zero and the vector is renormalized to sum exactly to 1.
RealVector born_probabilities(const DensityMatrix& rho, const Povm& povm);

// Inverse-CDF draw over the given probability vector (effect order).
int sample_from_probabilities(const RealVector& probabilities, RngStream& rng);

// One outcome index drawn from born_probabilities(rho, povm).
int sample_outcome(const DensityMatrix& rho, const Povm& povm, RngStream& rng);

} // namespace avqst
