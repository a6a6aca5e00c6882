#pragma once

#include "avqst/likelihood.hpp"
#include "avqst/states.hpp"

#include <vector>

namespace avqst {

// Membership predicate of the anytime-valid set in the log domain:
// log R <= ln(1/alpha). The boundary is inclusive.
bool avqst_log_contains(double log_martingale_value, double alpha);

/*
 * Likelihood-ratio test martingale against a candidate state rho:
 *
 *   log R_t(rho) = sum_{t'<=t} ln tr(Pi_{X_t'} predictor_{t'-1})
 *               -  sum_{t'<=t} ln tr(Pi_{X_t'} rho).
 *
 * The tracker accumulates the predictor (numerator) log-sum and the effect
 * history; the denominator is evaluated per query state. The predictor passed
 * to step() MUST be computed from data strictly before the supplied outcome —
 * feeding back the current outcome breaks the time-uniform coverage guarantee.
 *
 * Values are owned by one run; queries on an unchanging tracker are safe to
 * issue concurrently.
 */
class MartingaleTracker {
public:
    // initial_estimate is the predictor intended for the first step; it must
    // be strictly positive definite so no numerator term can be ln 0.
    MartingaleTracker(Eigen::Index dim, const DensityMatrix& initial_estimate);

    void step(const ComplexMatrix& effect, const DensityMatrix& predictor);

    // May return +infinity when some observed effect has zero probability
    // under rho (the state is excluded by the data outright).
    double log_martingale(const DensityMatrix& rho) const;
    double log_martingale_raw(const ComplexMatrix& rho) const;

    bool contains(const DensityMatrix& rho, double alpha) const;

    int t() const noexcept { return static_cast<int>(effects_.size()); }
    Eigen::Index dim() const noexcept { return dim_; }
    double numerator_log_sum() const noexcept { return numerator_; }
    const std::vector<ComplexMatrix>& effects() const noexcept { return effects_; }
    const DensityMatrix& initial_estimate() const noexcept { return initial_; }

private:
    Eigen::Index dim_;
    DensityMatrix initial_;
    double numerator_ = 0.0;
    std::vector<ComplexMatrix> effects_;
};

} // namespace avqst
