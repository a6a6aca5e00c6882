#include "avqst/particles.hpp"

#include "avqst/errors.hpp"

#include <cmath>
#include <limits>

namespace avqst {

void SisConfig::validate() const {
    if (particle_count < 2) {
        throw ValidationError("SisConfig: particle_count must be >= 2");
    }
    if (!(ess_threshold > 0.0 && ess_threshold <= 1.0)) {
        throw ValidationError("SisConfig: ess_threshold must lie in (0,1]");
    }
    if (move_steps < 0) {
        throw ValidationError("SisConfig: move_steps must be >= 0");
    }
    if (!(move_scale > 0.0)) {
        throw ValidationError("SisConfig: move_scale must be positive");
    }
}

ParticleEnsemble::ParticleEnsemble(std::vector<PureState> particles, RealVector weights)
    : particles_(std::move(particles)), weights_(std::move(weights)) {
    if (particles_.size() < 2) {
        throw ValidationError("ParticleEnsemble: need at least 2 particles");
    }
    if (weights_.size() != static_cast<Eigen::Index>(particles_.size())) {
        throw ValidationError("ParticleEnsemble: weight count mismatch");
    }
    const Eigen::Index d = particles_.front().dim();
    for (const PureState& p : particles_) {
        if (p.dim() != d) {
            throw ValidationError("ParticleEnsemble: mixed particle dimensions");
        }
    }
    if (weights_.minCoeff() < 0.0) {
        throw ValidationError("ParticleEnsemble: negative weight");
    }
    if (std::abs(weights_.sum() - 1.0) > 1e-12) {
        throw ValidationError("ParticleEnsemble: weights must sum to 1");
    }
}

ParticleEnsemble init_particles(int n, Eigen::Index dim, RngStream& rng) {
    if (n < 2) {
        throw ValidationError("init_particles: n must be >= 2");
    }
    std::vector<PureState> particles;
    particles.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        particles.push_back(haar_random_pure(dim, rng));
    }
    RealVector weights = RealVector::Constant(n, 1.0 / static_cast<double>(n));
    return ParticleEnsemble(std::move(particles), std::move(weights));
}

double effective_sample_size(const ParticleEnsemble& ensemble) {
    const RealVector& w = ensemble.weights();
    const double sum = w.sum();
    const double sumsq = w.squaredNorm();
    return sum * sum / sumsq;
}

DensityMatrix posterior_mean(const ParticleEnsemble& ensemble) {
    const Eigen::Index d = ensemble.dim();
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const RealVector& w = ensemble.weights();
    for (int i = 0; i < ensemble.size(); ++i) {
        const ComplexVector& a = ensemble.particles()[static_cast<std::size_t>(i)].amplitudes();
        m.noalias() += w[i] * (a * a.adjoint());
    }
    m = 0.5 * (m + m.adjoint().eval());
    m /= m.trace().real();
    return DensityMatrix(std::move(m));
}

bool mh_accept(double proposal_log_likelihood, double current_log_likelihood, RngStream& rng) {
    if (proposal_log_likelihood >= current_log_likelihood) {
        rng.next_double(); // keep the stream advance uniform across branches
        return true;
    }
    const double log_u = std::log(rng.next_double());
    return log_u < proposal_log_likelihood - current_log_likelihood;
}

namespace {

double pure_state_probability(const ComplexMatrix& effect, const ComplexVector& amps) {
    return (amps.adjoint() * effect * amps)(0, 0).real();
}

// Full-record log-likelihood of a pure state via the grouped counts.
double pure_state_log_likelihood(const MeasurementRecord& record, const ComplexVector& amps) {
    double ll = 0.0;
    const auto& groups = record.grouped();
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const double p = pure_state_probability(record.grouped_effect(g), amps);
        if (!(p > 0.0)) {
            return -std::numeric_limits<double>::infinity();
        }
        ll += static_cast<double>(groups[g].count) * std::log(p);
    }
    return ll;
}

} // namespace

ParticleEnsemble update_particles(const ParticleEnsemble& ensemble, const ComplexMatrix& effect,
                                  const MeasurementRecord& record, const SisConfig& config,
                                  RngStream& rng) {
    config.validate();
    const Eigen::Index d = ensemble.dim();
    if (effect.rows() != d || effect.cols() != d || record.dim() != d) {
        throw ValidationError("update_particles: dimension mismatch");
    }
    if (record.empty() || max_abs(record.effect(record.size() - 1) - effect) > 1e-15) {
        throw ValidationError("update_particles: record must end with the supplied effect");
    }

    const int n = ensemble.size();
    RealVector weights = ensemble.weights();
    for (int i = 0; i < n; ++i) {
        const double p =
            pure_state_probability(effect, ensemble.particles()[static_cast<std::size_t>(i)].amplitudes());
        weights[i] *= std::max(p, 0.0);
    }
    const double total = weights.sum();
    if (!(total > 0.0)) {
        throw DegeneratePosteriorError("update_particles: all weights vanished at time index " +
                                       std::to_string(record.size()));
    }
    weights /= total;
    if (!weights.allFinite()) {
        throw NumericError("update_particles: non-finite weight");
    }

    const double ess = 1.0 / weights.squaredNorm();
    if (ess >= config.ess_threshold * static_cast<double>(n)) {
        return ParticleEnsemble(ensemble.particles(), std::move(weights));
    }

    // Systematic resampling.
    std::vector<PureState> resampled;
    resampled.reserve(static_cast<std::size_t>(n));
    {
        const double u0 = rng.next_double();
        double cdf = weights[0];
        int j = 0;
        for (int i = 0; i < n; ++i) {
            const double target = (static_cast<double>(i) + u0) / static_cast<double>(n);
            while (cdf < target && j + 1 < n) {
                ++j;
                cdf += weights[j];
            }
            resampled.push_back(ensemble.particles()[static_cast<std::size_t>(j)]);
        }
    }

    // Move step: random-walk Metropolis-Hastings on the unit sphere targeting
    // the posterior over the full record (Haar prior cancels under the
    // symmetric proposal).
    for (int i = 0; i < n; ++i) {
        ComplexVector current = resampled[static_cast<std::size_t>(i)].amplitudes();
        double current_ll = pure_state_log_likelihood(record, current);
        for (int s = 0; s < config.move_steps; ++s) {
            ComplexVector proposal = current;
            for (Eigen::Index k = 0; k < d; ++k) {
                proposal[k] += config.move_scale * rng.next_complex_gaussian();
            }
            proposal /= proposal.norm();
            const double proposal_ll = pure_state_log_likelihood(record, proposal);
            if (mh_accept(proposal_ll, current_ll, rng)) {
                current.swap(proposal);
                current_ll = proposal_ll;
            }
        }
        resampled[static_cast<std::size_t>(i)] = PureState(std::move(current));
    }

    RealVector uniform = RealVector::Constant(n, 1.0 / static_cast<double>(n));
    return ParticleEnsemble(std::move(resampled), std::move(uniform));
}

} // namespace avqst
