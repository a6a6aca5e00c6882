#include "avqst/martingale.hpp"

#include "avqst/errors.hpp"

#include <cmath>
#include <limits>

namespace avqst {

bool avqst_log_contains(double log_martingale_value, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("avqst_log_contains: alpha must lie in (0,1)");
    }
    return log_martingale_value <= std::log(1.0 / alpha);
}

MartingaleTracker::MartingaleTracker(Eigen::Index dim, const DensityMatrix& initial_estimate)
    : dim_(dim), initial_(initial_estimate) {
    if (initial_estimate.dim() != dim) {
        throw ValidationError("MartingaleTracker: initial estimate dimension mismatch");
    }
    if (!(initial_estimate.min_eigenvalue() > 0.0)) {
        throw ValidationError(
            "MartingaleTracker: initial estimate must be strictly positive definite");
    }
}

void MartingaleTracker::step(const ComplexMatrix& effect, const DensityMatrix& predictor) {
    if (effect.rows() != dim_ || effect.cols() != dim_ || predictor.dim() != dim_) {
        throw ValidationError("MartingaleTracker::step: dimension mismatch");
    }
    const double p = effect_probability(effect, predictor.matrix());
    if (!(p > 0.0)) {
        throw PredictorContractError(
            "MartingaleTracker::step: predictor assigns nonpositive probability " +
            std::to_string(p) + " to the observed effect at t=" + std::to_string(t() + 1));
    }
    numerator_ += std::log(p);
    effects_.push_back(effect);
}

double MartingaleTracker::log_martingale_raw(const ComplexMatrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw ValidationError("MartingaleTracker::log_martingale: dimension mismatch");
    }
    double denominator = 0.0;
    for (const ComplexMatrix& effect : effects_) {
        const double p = effect_probability(effect, rho);
        if (!(p > 0.0)) {
            return std::numeric_limits<double>::infinity();
        }
        denominator += std::log(p);
    }
    return numerator_ - denominator;
}

double MartingaleTracker::log_martingale(const DensityMatrix& rho) const {
    return log_martingale_raw(rho.matrix());
}

bool MartingaleTracker::contains(const DensityMatrix& rho, double alpha) const {
    return avqst_log_contains(log_martingale(rho), alpha);
}

} // namespace avqst
