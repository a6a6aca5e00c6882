#pragma once

#include "avqst/likelihood.hpp"
#include "avqst/random_states.hpp"

#include <vector>

namespace avqst {

struct SisConfig {
    int particle_count = 1000;
    double ess_threshold = 0.5; // resample when ESS < threshold * N
    int move_steps = 3;         // Metropolis-Hastings moves per particle after a resample
    double move_scale = 0.1;    // amplitude-perturbation scale of the move proposal

    void validate() const;
};

/*
 * Weighted pure-state particle approximation of the Bayesian posterior.
 * Ensembles are values: updates return new ensembles, nothing is shared.
 */
class ParticleEnsemble {
public:
    ParticleEnsemble(std::vector<PureState> particles, RealVector weights);

    Eigen::Index dim() const noexcept { return particles_.front().dim(); }
    int size() const noexcept { return static_cast<int>(particles_.size()); }
    const std::vector<PureState>& particles() const noexcept { return particles_; }
    const RealVector& weights() const noexcept { return weights_; }

private:
    std::vector<PureState> particles_;
    RealVector weights_;
};

// n Haar-random pure states with uniform weights 1/n.
ParticleEnsemble init_particles(int n, Eigen::Index dim, RngStream& rng);

// (sum w)^2 / sum w^2; equals 1/sum w^2 for normalized weights.
double effective_sample_size(const ParticleEnsemble& ensemble);

// sum_i w_i |psi_i><psi_i|.
DensityMatrix posterior_mean(const ParticleEnsemble& ensemble);

// Metropolis-Hastings acceptance for a symmetric proposal against a Haar
// prior: accept iff log U < proposal_log_likelihood - current_log_likelihood.
bool mh_accept(double proposal_log_likelihood, double current_log_likelihood, RngStream& rng);

/*
 * One Bayesian update: weights are multiplied by tr(Pi |psi_i><psi_i|) and
 * renormalized. When the ESS falls below the configured fraction of N, the
 * ensemble is rejuvenated by systematic resampling followed by move_steps
 * Metropolis-Hastings moves per particle targeting the posterior over the
 * full record (Gaussian amplitude perturbation, renormalized; acceptance by
 * full-record likelihood ratio).
 *
 * `record` must contain every observation up to and including `effect`.
 */
ParticleEnsemble update_particles(const ParticleEnsemble& ensemble, const ComplexMatrix& effect,
                                  const MeasurementRecord& record, const SisConfig& config,
                                  RngStream& rng);

} // namespace avqst
