#pragma once

#include "avqst/likelihood.hpp"

namespace avqst {

struct MleConfig {
    double dilution = 0.5;   // epsilon of the diluted fixed-point step, (0,1]
    int max_iterations = 200;
    double tolerance = 1e-9; // stop when the per-step log-likelihood gain drops below this
    double floor = 1e-3;     // gamma mixed toward I/D on the returned estimate, [0,1)

    void validate() const;
};

struct MleResult {
    DensityMatrix estimate;  // floored: (1-floor) * raw + floor * I/D
    DensityMatrix raw;       // the optimizer's fixed point, no floor applied
    double log_likelihood;   // of raw
    int iterations;
    bool converged;          // false when the iteration cap was hit first
};

/*
 * Maximum-likelihood state estimate by diluted R-rho-R fixed-point iteration:
 *
 *   R(rho) = (1/t) sum_{t'} Pi_{X_{t'}} / tr(Pi_{X_{t'}} rho)
 *   rho   <- N[ (I + eps R) rho (I + eps R) ],   N = trace normalization.
 *
 * eps is halved whenever a step would decrease the log-likelihood, so the
 * likelihood sequence is non-decreasing (checked every accepted step). The
 * optional initial iterate enables warm starts in sequential use; it defaults
 * to I/D.
 */
MleResult mle_estimate(const MeasurementRecord& record, const MleConfig& config);
MleResult mle_estimate(const MeasurementRecord& record, const MleConfig& config,
                       const ComplexMatrix& initial);

} // namespace avqst
