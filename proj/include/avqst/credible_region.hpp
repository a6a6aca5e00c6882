#pragma once

#include "avqst/bloch.hpp"
#include "avqst/particles.hpp"

namespace avqst {

// Smallest value v among `values` such that the weight of {x : x <= v} is at
// least q. Weights need not be normalized.
double weighted_quantile_lower(const std::vector<double>& values,
                               const std::vector<double>& weights, double q);

/*
 * Gaussian credible-region model fitted to a particle posterior in Bloch
 * coordinates: weighted mean, ridge-regularized weighted covariance
 * (ridge 1e-9), and a Mahalanobis radius tau chosen as the smallest particle
 * distance capturing posterior mass >= 1-alpha.
 */
class CredibleRegionModel {
public:
    CredibleRegionModel(BlochVector mean, RealMatrix covariance, double threshold);

    const BlochVector& mean() const noexcept { return mean_; }
    const RealMatrix& covariance() const noexcept { return covariance_; }
    double threshold() const noexcept { return threshold_; }

    // sqrt((x - mean)^T covariance^{-1} (x - mean)).
    double mahalanobis(const RealVector& coords) const;
    bool contains(const DensityMatrix& rho) const;

private:
    BlochVector mean_;
    RealMatrix covariance_;
    double threshold_;
    Eigen::LDLT<RealMatrix> solver_;
};

inline constexpr double kCovarianceRidge = 1e-9;

CredibleRegionModel bqst_region(const ParticleEnsemble& ensemble, double alpha);

inline bool bqst_contains(const CredibleRegionModel& model, const DensityMatrix& rho) {
    return model.contains(rho);
}

} // namespace avqst
