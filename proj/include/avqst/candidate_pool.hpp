#pragma once

#include "avqst/martingale.hpp"
#include "avqst/random_states.hpp"

#include <string>
#include <vector>

namespace avqst {

enum class CandidateMeasure { HaarPure, HilbertSchmidt };

std::string to_string(CandidateMeasure measure);
CandidateMeasure candidate_measure_from_string(const std::string& tag);

/*
 * Monte Carlo sample of the state space used to estimate normalized set
 * sizes. Each candidate carries its cumulative log-likelihood, updated once
 * per time step, so membership queries cost O(K) instead of O(K t).
 */
class CandidatePool {
public:
    static CandidatePool create(int k, Eigen::Index dim, CandidateMeasure measure, RngStream& rng);

    void step(const ComplexMatrix& effect);

    // Fraction of candidates inside the anytime-valid set at level alpha.
    // The pool and tracker must have been advanced through the same number of
    // steps; a mismatch throws SynchronizationError.
    double covered_fraction(const MartingaleTracker& tracker, double alpha) const;

    int t() const noexcept { return steps_; }
    Eigen::Index dim() const noexcept { return dim_; }
    int size() const noexcept { return static_cast<int>(candidates_.size()); }
    CandidateMeasure measure() const noexcept { return measure_; }
    const std::vector<DensityMatrix>& candidates() const noexcept { return candidates_; }
    // Cumulative log-likelihood per candidate; -infinity marks a candidate
    // excluded by a zero-probability observation.
    const RealVector& cumulative_log_likelihood() const noexcept { return cumulative_; }

private:
    CandidatePool(Eigen::Index dim, CandidateMeasure measure, std::vector<DensityMatrix> candidates);

    Eigen::Index dim_;
    CandidateMeasure measure_;
    std::vector<DensityMatrix> candidates_;
    RealVector cumulative_;
    int steps_ = 0;
};

} // namespace avqst
