#include "avqst/mle.hpp"

#include "avqst/errors.hpp"

#include <cmath>
#include <limits>

namespace avqst {

void MleConfig::validate() const {
    if (!(dilution > 0.0 && dilution <= 1.0)) {
        throw ValidationError("MleConfig: dilution must lie in (0,1]");
    }
    if (max_iterations < 1) {
        throw ValidationError("MleConfig: max_iterations must be >= 1");
    }
    if (!(tolerance > 0.0)) {
        throw ValidationError("MleConfig: tolerance must be positive");
    }
    if (!(floor >= 0.0 && floor < 1.0)) {
        throw ValidationError("MleConfig: floor must lie in [0,1)");
    }
}

namespace {

double grouped_log_likelihood(const MeasurementRecord& record, const ComplexMatrix& rho,
                              std::vector<double>& probs) {
    const auto& groups = record.grouped();
    double ll = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const double p = effect_probability(record.grouped_effect(g), rho);
        probs[g] = p;
        if (!(p > 0.0)) {
            ll = -std::numeric_limits<double>::infinity();
        } else {
            ll += static_cast<double>(groups[g].count) * std::log(p);
        }
    }
    return ll;
}

} // namespace

MleResult mle_estimate(const MeasurementRecord& record, const MleConfig& config) {
    const Eigen::Index d = record.dim();
    const ComplexMatrix init = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    return mle_estimate(record, config, init);
}

MleResult mle_estimate(const MeasurementRecord& record, const MleConfig& config,
                       const ComplexMatrix& initial) {
    config.validate();
    if (record.empty()) {
        throw ValidationError("mle_estimate: record is empty");
    }
    const Eigen::Index d = record.dim();
    if (initial.rows() != d || initial.cols() != d) {
        throw ValidationError("mle_estimate: initial iterate has wrong dimension");
    }

    const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
    // Blend a sliver of I/D into the start so every observed effect has
    // strictly positive probability even from a rank-deficient warm start.
    ComplexMatrix rho = (1.0 - 1e-12) * initial + (1e-12 / static_cast<double>(d)) * identity;
    rho = 0.5 * (rho + rho.adjoint().eval());
    rho /= rho.trace().real();

    const auto& groups = record.grouped();
    const double total = static_cast<double>(record.size());
    std::vector<double> probs(groups.size());
    double ll = grouped_log_likelihood(record, rho, probs);

    double eps = config.dilution;
    int iterations = 0;
    bool converged = false;
    ComplexMatrix r_op(d, d);
    ComplexMatrix candidate(d, d);
    std::vector<double> cand_probs(groups.size());

    while (iterations < config.max_iterations) {
        ++iterations;
        r_op.setZero();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const double p = std::max(probs[g], 1e-300);
            r_op += (static_cast<double>(groups[g].count) / (total * p)) * record.grouped_effect(g);
        }

        double ll_candidate;
        while (true) {
            const ComplexMatrix step = identity + eps * r_op;
            candidate = step * rho * step;
            candidate = 0.5 * (candidate + candidate.adjoint().eval());
            candidate /= candidate.trace().real();
            ll_candidate = grouped_log_likelihood(record, candidate, cand_probs);
            if (ll_candidate >= ll || eps < 1e-12) {
                break;
            }
            eps *= 0.5;
        }
        if (ll_candidate < ll) {
            // No ascent even at vanishing dilution: numerically stationary.
            converged = true;
            break;
        }
        const double gain = ll_candidate - ll;
        rho.swap(candidate);
        probs.swap(cand_probs);
        ll = ll_candidate;
        if (gain < config.tolerance) {
            converged = true;
            break;
        }
    }

    DensityMatrix raw = project_to_density(rho);
    DensityMatrix estimate = config.floor > 0.0 ? mix_with_identity(raw, config.floor) : raw;
    return {std::move(estimate), std::move(raw), ll, iterations, converged};
}

} // namespace avqst
