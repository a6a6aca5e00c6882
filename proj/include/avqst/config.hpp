#pragma once

#include "avqst/candidate_pool.hpp"
#include "avqst/mle.hpp"
#include "avqst/particles.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace avqst {

enum class PredictorKind { Mle, PosteriorMean, Fixed };
enum class Method { Av, Bqst, Lr };

std::string to_string(PredictorKind kind);
std::string to_string(Method method);
PredictorKind predictor_from_string(const std::string& tag);
Method method_from_string(const std::string& tag);

/*
 * Full experiment description. The JSON config file mirrors these fields in
 * lower_snake_case; unknown keys are rejected. Defaults that depend on the
 * qubit count (run_count, pool_size, sis.particle_count) are resolved at load
 * time, so a parsed config always carries concrete values.
 */
struct ExperimentConfig {
    int qubits = 2;
    int horizon = 100;
    std::vector<double> alphas = {0.1}; // singleton for plain runs, list for sweeps
    int run_count = 500;
    int pool_size = 4096;
    CandidateMeasure pool_measure = CandidateMeasure::HilbertSchmidt;
    SisConfig sis{};
    MleConfig mle{};
    PredictorKind predictor = PredictorKind::Mle;
    // Mixing floor toward I/D applied to posterior-mean and fixed predictors
    // before they are handed to the martingale (the MLE predictor already has
    // mle.floor). Keeps every numerator term finite.
    double predictor_floor = 1e-3;
    std::vector<Method> methods = {Method::Av, Method::Bqst, Method::Lr};
    std::uint64_t master_seed = 1;
    std::vector<int> record_times; // empty = default grid

    int dim() const;
    double alpha() const; // first entry; plain runs require exactly one
    bool method_enabled(Method m) const;
    // Default: every t in 1..T for T <= 200, ~200-point logarithmic grid beyond.
    std::vector<int> resolved_record_times() const;

    // Invariant violations, empty when the config is usable.
    std::vector<std::string> validate() const;
    void require_valid() const; // throws ValidationError listing all violations
};

// key=value pairs applied over the parsed file; nested keys use dots
// (e.g. mle.tolerance=1e-8). Every key must name an existing config field.
using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

// Parse JSON text, apply overrides, resolve qubit-dependent defaults.
ExperimentConfig config_from_json(const std::string& json_text,
                                  const ConfigOverrides& overrides = {});
ExperimentConfig load_config(const std::filesystem::path& path,
                             const ConfigOverrides& overrides = {});

std::string config_to_json(const ExperimentConfig& config);

} // namespace avqst
