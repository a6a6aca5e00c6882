#pragma once

#include "avqst/mle.hpp"

namespace avqst {

enum class LrThresholdMode { WilksDefault, UserSupplied };

// Default log-domain threshold: half the chi-square (1-alpha)-quantile with
// D^2 - 1 degrees of freedom. Pluggable: exact calibrated thresholds can be
// supplied through LrThresholdMode::UserSupplied instead.
double wilks_default_threshold(Eigen::Index dim, double alpha);

/*
 * Fixed-sample likelihood-ratio region: a state rho belongs to the region
 * when log L_T(mle) - log L_T(rho) <= lambda. The MLE here is the unfloored
 * maximizer (floor 0), independent of any floor configured for prediction.
 */
struct LrRegionModel {
    double mle_log_likelihood = 0.0;
    double threshold = 0.0; // lambda, log domain
    LrThresholdMode mode = LrThresholdMode::WilksDefault;
    std::size_t record_length = 0;
};

LrRegionModel lrqst_region(const MeasurementRecord& record, double alpha, LrThresholdMode mode,
                           const MleConfig& mle_config,
                           double user_threshold = -1.0,
                           const ComplexMatrix* warm_start = nullptr);

// `record` must be the record the model was built from (length-checked).
bool lrqst_contains(const LrRegionModel& model, const DensityMatrix& rho,
                    const MeasurementRecord& record);

} // namespace avqst
