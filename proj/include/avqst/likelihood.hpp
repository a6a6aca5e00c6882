#pragma once

#include "avqst/record.hpp"
#include "avqst/states.hpp"

namespace avqst {

// Probability of one effect under a candidate matrix, Re tr(Pi rho).
inline double effect_probability(const ComplexMatrix& effect, const ComplexMatrix& rho) {
    return effect.cwiseProduct(rho.transpose()).sum().real();
}

// Natural-log likelihood of the record under rho: sum_t ln tr(Pi_{X_t} rho).
// Returns -infinity when any observed-effect probability is <= 0.
double log_likelihood(const ComplexMatrix& rho, const MeasurementRecord& record);
double log_likelihood(const DensityMatrix& rho, const MeasurementRecord& record);

} // namespace avqst
