#include "avqst/lr_region.hpp"

#include "avqst/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>

namespace avqst {

double wilks_default_threshold(Eigen::Index dim, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("wilks_default_threshold: alpha must lie in (0,1)");
    }
    const double dof = static_cast<double>(dim * dim - 1);
    const boost::math::chi_squared dist(dof);
    return 0.5 * boost::math::quantile(dist, 1.0 - alpha);
}

LrRegionModel lrqst_region(const MeasurementRecord& record, double alpha, LrThresholdMode mode,
                           const MleConfig& mle_config, double user_threshold,
                           const ComplexMatrix* warm_start) {
    if (record.empty()) {
        throw ValidationError("lrqst_region: record is empty");
    }
    double lambda;
    if (mode == LrThresholdMode::WilksDefault) {
        lambda = wilks_default_threshold(record.dim(), alpha);
    } else {
        lambda = user_threshold;
        if (!(lambda >= 0.0)) { // rejects NaN and negatives; +infinity is allowed
            throw ValidationError("lrqst_region: user-supplied threshold must be >= 0");
        }
    }
    MleConfig unfloored = mle_config;
    unfloored.floor = 0.0;
    const MleResult mle = warm_start ? mle_estimate(record, unfloored, *warm_start)
                                     : mle_estimate(record, unfloored);
    return {mle.log_likelihood, lambda, mode, record.size()};
}

bool lrqst_contains(const LrRegionModel& model, const DensityMatrix& rho,
                    const MeasurementRecord& record) {
    if (record.size() != model.record_length) {
        throw SynchronizationError("lrqst_contains: record length " + std::to_string(record.size()) +
                                   " does not match model length " +
                                   std::to_string(model.record_length));
    }
    const double ratio = model.mle_log_likelihood - log_likelihood(rho, record);
    return ratio <= model.threshold;
}

} // namespace avqst
