#include "avqst/candidate_pool.hpp"

#include "avqst/errors.hpp"

#include <cmath>
#include <limits>

namespace avqst {

std::string to_string(CandidateMeasure measure) {
    return measure == CandidateMeasure::HaarPure ? "haar-pure" : "hilbert-schmidt";
}

CandidateMeasure candidate_measure_from_string(const std::string& tag) {
    if (tag == "haar-pure") {
        return CandidateMeasure::HaarPure;
    }
    if (tag == "hilbert-schmidt") {
        return CandidateMeasure::HilbertSchmidt;
    }
    throw ValidationError("unknown candidate measure '" + tag +
                          "' (expected haar-pure or hilbert-schmidt)");
}

CandidatePool::CandidatePool(Eigen::Index dim, CandidateMeasure measure,
                             std::vector<DensityMatrix> candidates)
    : dim_(dim), measure_(measure), candidates_(std::move(candidates)),
      cumulative_(RealVector::Zero(static_cast<Eigen::Index>(candidates_.size()))) {}

CandidatePool CandidatePool::create(int k, Eigen::Index dim, CandidateMeasure measure,
                                    RngStream& rng) {
    if (k < 1) {
        throw ValidationError("CandidatePool: k must be >= 1");
    }
    std::vector<DensityMatrix> candidates;
    candidates.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        if (measure == CandidateMeasure::HaarPure) {
            candidates.push_back(haar_random_pure(dim, rng).density());
        } else {
            candidates.push_back(hs_random_density(dim, dim, rng));
        }
    }
    return CandidatePool(dim, measure, std::move(candidates));
}

void CandidatePool::step(const ComplexMatrix& effect) {
    if (effect.rows() != dim_ || effect.cols() != dim_) {
        throw ValidationError("CandidatePool::step: dimension mismatch");
    }
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
        const Eigen::Index idx = static_cast<Eigen::Index>(i);
        if (std::isinf(cumulative_[idx])) {
            continue;
        }
        const double p = effect_probability(effect, candidates_[i].matrix());
        cumulative_[idx] = (p > 0.0) ? cumulative_[idx] + std::log(p)
                                     : -std::numeric_limits<double>::infinity();
    }
    ++steps_;
}

double CandidatePool::covered_fraction(const MartingaleTracker& tracker, double alpha) const {
    if (tracker.t() != steps_) {
        throw SynchronizationError("covered_fraction: tracker at t=" + std::to_string(tracker.t()) +
                                   " but pool at t=" + std::to_string(steps_));
    }
    if (tracker.dim() != dim_) {
        throw ValidationError("covered_fraction: dimension mismatch");
    }
    const double numerator = tracker.numerator_log_sum();
    int covered = 0;
    for (Eigen::Index i = 0; i < cumulative_.size(); ++i) {
        if (avqst_log_contains(numerator - cumulative_[i], alpha)) {
            ++covered;
        }
    }
    return static_cast<double>(covered) / static_cast<double>(cumulative_.size());
}

} // namespace avqst
