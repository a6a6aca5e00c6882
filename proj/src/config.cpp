#include "avqst/config.hpp"

#include "avqst/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace avqst {

using nlohmann::json;

std::string to_string(PredictorKind kind) {
    switch (kind) {
        case PredictorKind::Mle: return "mle";
        case PredictorKind::PosteriorMean: return "posterior-mean";
        case PredictorKind::Fixed: return "fixed";
    }
    return "mle";
}

std::string to_string(Method method) {
    switch (method) {
        case Method::Av: return "av";
        case Method::Bqst: return "bqst";
        case Method::Lr: return "lr";
    }
    return "av";
}

PredictorKind predictor_from_string(const std::string& tag) {
    if (tag == "mle") return PredictorKind::Mle;
    if (tag == "posterior-mean") return PredictorKind::PosteriorMean;
    if (tag == "fixed") return PredictorKind::Fixed;
    throw ValidationError("unknown predictor '" + tag + "' (expected mle, posterior-mean or fixed)");
}

Method method_from_string(const std::string& tag) {
    if (tag == "av") return Method::Av;
    if (tag == "bqst") return Method::Bqst;
    if (tag == "lr") return Method::Lr;
    throw ValidationError("unknown method '" + tag + "' (expected av, bqst or lr)");
}

int ExperimentConfig::dim() const {
    int d = 1;
    for (int i = 0; i < qubits; ++i) {
        d *= 2;
    }
    return d;
}

double ExperimentConfig::alpha() const {
    if (alphas.size() != 1) {
        throw ValidationError("config: expected a single alpha, got a list of " +
                              std::to_string(alphas.size()));
    }
    return alphas.front();
}

bool ExperimentConfig::method_enabled(Method m) const {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

std::vector<int> ExperimentConfig::resolved_record_times() const {
    if (!record_times.empty()) {
        std::vector<int> times = record_times;
        std::sort(times.begin(), times.end());
        times.erase(std::unique(times.begin(), times.end()), times.end());
        return times;
    }
    std::vector<int> times;
    if (horizon <= 200) {
        times.reserve(static_cast<std::size_t>(horizon));
        for (int t = 1; t <= horizon; ++t) {
            times.push_back(t);
        }
        return times;
    }
    // ~200-point logarithmic grid, always including 1 and T.
    const int points = 200;
    const double log_t = std::log(static_cast<double>(horizon));
    int last = 0;
    for (int i = 0; i < points; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(points - 1);
        const int t = std::max(1, static_cast<int>(std::lround(std::exp(frac * log_t))));
        if (t > last) {
            times.push_back(t);
            last = t;
        }
    }
    if (times.back() != horizon) {
        times.push_back(horizon);
    }
    return times;
}

std::vector<std::string> ExperimentConfig::validate() const {
    std::vector<std::string> problems;
    if (qubits < 1) {
        problems.push_back("qubits must be >= 1");
    }
    if (qubits > 8) {
        problems.push_back("qubits must be <= 8 (dimension cap 2^8)");
    }
    if (horizon < 1) {
        problems.push_back("horizon must be >= 1");
    }
    if (alphas.empty()) {
        problems.push_back("alpha must be a number or a non-empty list");
    }
    for (double a : alphas) {
        if (!(a > 0.0 && a < 1.0)) {
            problems.push_back("alpha " + std::to_string(a) + " must lie in (0,1)");
        }
    }
    if (run_count < 1) {
        problems.push_back("run_count must be >= 1");
    }
    if (pool_size < 1) {
        problems.push_back("pool_size must be >= 1");
    }
    if (sis.particle_count < 2) {
        problems.push_back("sis.particle_count must be >= 2");
    }
    if (!(sis.ess_threshold > 0.0 && sis.ess_threshold <= 1.0)) {
        problems.push_back("sis.ess_threshold must lie in (0,1]");
    }
    if (sis.move_steps < 0) {
        problems.push_back("sis.move_steps must be >= 0");
    }
    if (!(sis.move_scale > 0.0)) {
        problems.push_back("sis.move_scale must be positive");
    }
    if (!(mle.dilution > 0.0 && mle.dilution <= 1.0)) {
        problems.push_back("mle.dilution must lie in (0,1]");
    }
    if (mle.max_iterations < 1) {
        problems.push_back("mle.max_iterations must be >= 1");
    }
    if (!(mle.tolerance > 0.0)) {
        problems.push_back("mle.tolerance must be positive");
    }
    if (!(mle.floor >= 0.0 && mle.floor < 1.0)) {
        problems.push_back("mle.floor must lie in [0,1)");
    }
    if (!(predictor_floor >= 0.0 && predictor_floor < 1.0)) {
        problems.push_back("predictor_floor must lie in [0,1)");
    }
    if (methods.empty()) {
        problems.push_back("methods must name at least one of av, bqst, lr");
    }
    {
        std::set<Method> seen;
        for (Method m : methods) {
            if (!seen.insert(m).second) {
                problems.push_back("methods lists '" + to_string(m) + "' twice");
            }
        }
    }
    for (int t : record_times) {
        if (t < 1 || t > horizon) {
            problems.push_back("record_times entry " + std::to_string(t) +
                               " outside 1.." + std::to_string(horizon));
        }
    }
    return problems;
}

void ExperimentConfig::require_valid() const {
    const auto problems = validate();
    if (problems.empty()) {
        return;
    }
    std::ostringstream msg;
    msg << "invalid config:";
    for (const auto& p : problems) {
        msg << "\n  - " << p;
    }
    throw ValidationError(msg.str());
}

namespace {

const std::set<std::string> kTopLevelKeys = {
    "qubits",        "horizon",     "alpha",        "run_count",
    "pool_size",     "pool_measure", "sis",         "mle",
    "predictor",     "predictor_floor", "methods",  "master_seed",
    "record_times"};
const std::set<std::string> kSisKeys = {"particle_count", "ess_threshold", "move_steps",
                                        "move_scale"};
const std::set<std::string> kMleKeys = {"dilution", "max_iterations", "tolerance", "floor"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& scope) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ValidationError("config: unknown key '" + scope + item.key() + "'");
        }
    }
}

json parse_override_value(const std::string& value) {
    // Try JSON first so numbers, booleans and arrays work; fall back to string.
    const json parsed = json::parse(value, nullptr, false);
    if (!parsed.is_discarded()) {
        return parsed;
    }
    return json(value);
}

} // namespace

ExperimentConfig config_from_json(const std::string& json_text, const ConfigOverrides& overrides) {
    json obj = json::parse(json_text, nullptr, false);
    if (obj.is_discarded()) {
        throw ValidationError("config: malformed JSON");
    }
    if (!obj.is_object()) {
        throw ValidationError("config: top level must be a JSON object");
    }

    for (const auto& [key, value] : overrides) {
        const auto dot = key.find('.');
        if (dot == std::string::npos) {
            if (!kTopLevelKeys.count(key)) {
                throw ValidationError("config override names unknown key '" + key + "'");
            }
            obj[key] = parse_override_value(value);
        } else {
            const std::string outer = key.substr(0, dot);
            const std::string inner = key.substr(dot + 1);
            const bool known = (outer == "sis" && kSisKeys.count(inner)) ||
                               (outer == "mle" && kMleKeys.count(inner));
            if (!known) {
                throw ValidationError("config override names unknown key '" + key + "'");
            }
            obj[outer][inner] = parse_override_value(value);
        }
    }

    reject_unknown(obj, kTopLevelKeys, "");
    ExperimentConfig cfg;
    try {
        cfg.qubits = obj.value("qubits", 2);
        cfg.horizon = obj.value("horizon", 100);
        if (obj.contains("alpha")) {
            cfg.alphas.clear();
            if (obj["alpha"].is_array()) {
                for (const auto& a : obj["alpha"]) {
                    cfg.alphas.push_back(a.get<double>());
                }
            } else {
                cfg.alphas.push_back(obj["alpha"].get<double>());
            }
        }
        // Qubit-dependent defaults: two-qubit scale below, four-qubit scale at >= 3.
        const bool large = cfg.qubits >= 3;
        cfg.run_count = obj.value("run_count", large ? 200 : 500);
        cfg.pool_size = obj.value("pool_size", large ? 2048 : 4096);
        if (obj.contains("pool_measure")) {
            cfg.pool_measure = candidate_measure_from_string(obj["pool_measure"].get<std::string>());
        }
        if (obj.contains("sis")) {
            reject_unknown(obj["sis"], kSisKeys, "sis.");
        }
        const json sis = obj.value("sis", json::object());
        cfg.sis.particle_count = sis.value("particle_count", large ? 4000 : 1000);
        cfg.sis.ess_threshold = sis.value("ess_threshold", 0.5);
        cfg.sis.move_steps = sis.value("move_steps", 3);
        cfg.sis.move_scale = sis.value("move_scale", 0.1);
        if (obj.contains("mle")) {
            reject_unknown(obj["mle"], kMleKeys, "mle.");
        }
        const json mle = obj.value("mle", json::object());
        cfg.mle.dilution = mle.value("dilution", 0.5);
        cfg.mle.max_iterations = mle.value("max_iterations", 200);
        cfg.mle.tolerance = mle.value("tolerance", 1e-9);
        cfg.mle.floor = mle.value("floor", 1e-3);
        if (obj.contains("predictor")) {
            cfg.predictor = predictor_from_string(obj["predictor"].get<std::string>());
        }
        cfg.predictor_floor = obj.value("predictor_floor", 1e-3);
        if (obj.contains("methods")) {
            cfg.methods.clear();
            for (const auto& m : obj["methods"]) {
                cfg.methods.push_back(method_from_string(m.get<std::string>()));
            }
        }
        cfg.master_seed = obj.value("master_seed", std::uint64_t{1});
        if (obj.contains("record_times")) {
            cfg.record_times.clear();
            for (const auto& t : obj["record_times"]) {
                cfg.record_times.push_back(t.get<int>());
            }
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, const ConfigOverrides& overrides) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return config_from_json(buffer.str(), overrides);
}

std::string config_to_json(const ExperimentConfig& config) {
    json obj;
    obj["qubits"] = config.qubits;
    obj["horizon"] = config.horizon;
    if (config.alphas.size() == 1) {
        obj["alpha"] = config.alphas.front();
    } else {
        obj["alpha"] = config.alphas;
    }
    obj["run_count"] = config.run_count;
    obj["pool_size"] = config.pool_size;
    obj["pool_measure"] = to_string(config.pool_measure);
    obj["sis"] = {{"particle_count", config.sis.particle_count},
                  {"ess_threshold", config.sis.ess_threshold},
                  {"move_steps", config.sis.move_steps},
                  {"move_scale", config.sis.move_scale}};
    obj["mle"] = {{"dilution", config.mle.dilution},
                  {"max_iterations", config.mle.max_iterations},
                  {"tolerance", config.mle.tolerance},
                  {"floor", config.mle.floor}};
    obj["predictor"] = to_string(config.predictor);
    obj["predictor_floor"] = config.predictor_floor;
    json methods = json::array();
    for (Method m : config.methods) {
        methods.push_back(to_string(m));
    }
    obj["methods"] = methods;
    obj["master_seed"] = config.master_seed;
    obj["record_times"] = config.record_times;
    return obj.dump(2);
}

} // namespace avqst
