#include "avqst/credible_region.hpp"

#include "avqst/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace avqst {

double weighted_quantile_lower(const std::vector<double>& values,
                               const std::vector<double>& weights, double q) {
    if (values.empty() || values.size() != weights.size()) {
        throw ValidationError("weighted_quantile_lower: empty or mismatched inputs");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw ValidationError("weighted_quantile_lower: q must lie in [0,1]");
    }
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) {
        throw ValidationError("weighted_quantile_lower: weights sum to zero");
    }
    double mass = 0.0;
    for (std::size_t i : order) {
        mass += weights[i];
        if (mass >= q * total - 1e-15) {
            return values[i];
        }
    }
    return values[order.back()];
}

CredibleRegionModel::CredibleRegionModel(BlochVector mean, RealMatrix covariance, double threshold)
    : mean_(std::move(mean)), covariance_(std::move(covariance)), threshold_(threshold) {
    const Eigen::Index n = mean_.coords.size();
    if (covariance_.rows() != n || covariance_.cols() != n) {
        throw ValidationError("CredibleRegionModel: covariance shape mismatch");
    }
    if ((covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff() > kStateTol) {
        throw ValidationError("CredibleRegionModel: covariance is not symmetric");
    }
    if (!(threshold_ >= 0.0)) {
        throw ValidationError("CredibleRegionModel: threshold must be >= 0");
    }
    solver_.compute(covariance_);
    if (solver_.info() != Eigen::Success || !solver_.isPositive()) {
        throw NumericError("CredibleRegionModel: covariance is singular beyond the ridge");
    }
}

double CredibleRegionModel::mahalanobis(const RealVector& coords) const {
    if (coords.size() != mean_.coords.size()) {
        throw ValidationError("CredibleRegionModel: coordinate length mismatch");
    }
    const RealVector centered = coords - mean_.coords;
    const double sq = centered.dot(solver_.solve(centered));
    if (!std::isfinite(sq)) {
        throw NumericError("CredibleRegionModel: Mahalanobis distance is not finite");
    }
    return std::sqrt(std::max(sq, 0.0));
}

bool CredibleRegionModel::contains(const DensityMatrix& rho) const {
    return mahalanobis(bloch_coordinates_raw(rho.matrix())) <= threshold_;
}

CredibleRegionModel bqst_region(const ParticleEnsemble& ensemble, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ValidationError("bqst_region: alpha must lie in (0,1)");
    }
    if (effective_sample_size(ensemble) < 2.0) {
        throw NumericError("bqst_region: ensemble is degenerate (ESS < 2)");
    }
    const Eigen::Index d = ensemble.dim();
    const Eigen::Index n_coords = bloch_size(d);
    const int n = ensemble.size();
    const RealVector& w = ensemble.weights();

    RealMatrix coords(n_coords, n);
    for (int i = 0; i < n; ++i) {
        coords.col(i) =
            bloch_coordinates_raw(ensemble.particles()[static_cast<std::size_t>(i)].projector());
    }
    const RealVector mean = coords * w;
    RealMatrix centered = coords.colwise() - mean;
    RealMatrix cov = centered * w.asDiagonal() * centered.transpose();
    cov = 0.5 * (cov + cov.transpose().eval());
    cov += kCovarianceRidge * RealMatrix::Identity(n_coords, n_coords);

    // Fit the threshold on the particles themselves: smallest radius holding
    // posterior mass >= 1 - alpha.
    CredibleRegionModel unthresholded(BlochVector(d, mean), cov, 0.0);
    std::vector<double> distances(static_cast<std::size_t>(n));
    std::vector<double> weights(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        distances[static_cast<std::size_t>(i)] = unthresholded.mahalanobis(coords.col(i));
        weights[static_cast<std::size_t>(i)] = w[i];
    }
    const double tau = weighted_quantile_lower(distances, weights, 1.0 - alpha);
    return CredibleRegionModel(BlochVector(d, mean), std::move(cov), tau);
}

} // namespace avqst
