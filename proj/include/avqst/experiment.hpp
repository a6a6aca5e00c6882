#pragma once

#include "avqst/config.hpp"
#include "avqst/record.hpp"

#include <functional>
#include <map>
#include <memory>

namespace avqst {

struct MethodMetrics {
    bool instant_covered = false;   // truth inside the set at exactly this t
    bool covered_so_far = false;    // truth inside the set at every t' <= t
    double covered_fraction = 0.0;  // candidate-pool fraction inside the set
    double estimator_distance = 0.0; // trace distance of the method's point estimate to truth

    bool operator==(const MethodMetrics&) const = default;
};

struct RunResult {
    int run_index = 0;
    RealVector truth_bloch;
    std::vector<int> record_times;
    std::map<Method, std::vector<MethodMetrics>> metrics; // enabled methods only

    bool operator==(const RunResult& other) const;
};

struct AggregateRow {
    double miscoverage = 0.0; // cumulative: fraction of runs with any miss at t' <= t
    double size_p25 = 0.0, size_median = 0.0, size_p75 = 0.0;
    double dist_p25 = 0.0, dist_median = 0.0, dist_p75 = 0.0;
};

struct AggregateStats {
    double alpha = 0.0;
    int runs = 0;
    std::vector<int> record_times;
    std::vector<Method> methods;
    std::map<Method, std::vector<AggregateRow>> rows; // aligned with record_times
};

struct SweepRow {
    Method method;
    double alpha;
    int t_eval;
    double miscoverage; // cumulative up to t_eval
    double size_median;
    int runs;
};

using ProgressFn = std::function<void(int completed, int total)>;

// Simulate one run. Deterministic given (master_seed, run_index): the run's
// substreams derive from derive_seed(master_seed, run_index).
RunResult run_single(const ExperimentConfig& config, int run_index);

// All runs plus the deterministic reduction; threads <= 0 picks the hardware
// concurrency. Parallel and serial schedules produce identical stats.
AggregateStats run_experiment(const ExperimentConfig& config, int threads = 0,
                              const ProgressFn& progress = nullptr);

// One experiment per alpha at shared measurement randomness (the master seed
// and hence every observation sequence is reused across alphas); membership
// is re-thresholded per alpha and evaluated at t_eval = horizon.
std::vector<SweepRow> alpha_sweep(const ExperimentConfig& config, const std::vector<double>& alphas,
                                  int threads = 0, const ProgressFn& progress = nullptr);

// Linear-interpolation quantile of a sample (q in [0,1]).
double sample_quantile(std::vector<double> values, double q);

namespace detail {

// Substream labels under a run's seed.
enum RunStream : std::uint64_t {
    kTruthStream = 1,
    kMeasurementStream = 2,
    kParticleStream = 3,
    kPoolStream = 4,
    kFixedPredictorStream = 5,
};

struct MultiAlphaRunResult {
    int run_index = 0;
    RealVector truth_bloch;
    // per_alpha[a] holds metrics per enabled method aligned with record_times.
    std::vector<std::map<Method, std::vector<MethodMetrics>>> per_alpha;
};

MultiAlphaRunResult run_core(const ExperimentConfig& config, int run_index,
                             const std::shared_ptr<const Povm>& povm,
                             const std::vector<double>& alphas,
                             const std::vector<int>& record_times);

std::shared_ptr<const Povm> build_measurement(const ExperimentConfig& config);

} // namespace detail

} // namespace avqst
