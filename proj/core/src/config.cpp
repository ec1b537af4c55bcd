#include "hopf/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hopf {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    }
}

long parse_long(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw ConfigError(key + ": expected an integer, got '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (...) {
        throw ConfigError(key + ": expected an unsigned integer, got '" + v + "'");
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(key, item));
    }
    return out;
}

const char* const kKnownKeys[] = {
    "abs_alpha",     "abs_beta",        "n_u",
    "n_sigma",       "t_max",           "cfl",
    "monitor_cadence", "initial_family", "initial_epsilon",
    "initial_path",  "diag_A",          "diag_B",
    "seed",          "threads",         "out_dir",
    "verify_samples", "verify_fd_samples", "hessian_variant",
    "snapshot_times", "sweep_alpha",    "sweep_beta",
};

}  // namespace

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "abs_alpha")
        cfg.abs_alpha = parse_double(key, value);
    else if (key == "abs_beta")
        cfg.abs_beta = parse_double(key, value);
    else if (key == "n_u")
        cfg.n_u = static_cast<int>(parse_long(key, value));
    else if (key == "n_sigma")
        cfg.n_sigma = static_cast<int>(parse_long(key, value));
    else if (key == "t_max")
        cfg.t_max = parse_double(key, value);
    else if (key == "cfl")
        cfg.cfl = parse_double(key, value);
    else if (key == "monitor_cadence")
        cfg.monitor_cadence = parse_double(key, value);
    else if (key == "initial_family")
        cfg.initial_family = value;
    else if (key == "initial_epsilon")
        cfg.initial_epsilon = parse_double(key, value);
    else if (key == "initial_path")
        cfg.initial_path = value;
    else if (key == "diag_A")
        cfg.diag_A = parse_double(key, value);
    else if (key == "diag_B")
        cfg.diag_B = parse_double(key, value);
    else if (key == "seed")
        cfg.seed = parse_u64(key, value);
    else if (key == "threads")
        cfg.threads = static_cast<int>(parse_long(key, value));
    else if (key == "out_dir")
        cfg.out_dir = value;
    else if (key == "verify_samples")
        cfg.verify_samples = parse_long(key, value);
    else if (key == "verify_fd_samples")
        cfg.verify_fd_samples = parse_long(key, value);
    else if (key == "hessian_variant")
        cfg.hessian_variant = value;
    else if (key == "snapshot_times")
        cfg.snapshot_times = parse_list(key, value);
    else if (key == "sweep_alpha")
        cfg.sweep_alpha = parse_list(key, value);
    else if (key == "sweep_beta")
        cfg.sweep_beta = parse_list(key, value);
    else
        throw ConfigError("unknown key '" + key + "'");
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": empty key");
        try {
            apply_key_value(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(lineno) + ": " +
                              e.what());
        }
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    apply_config_text(cfg, text);
    validate_config(cfg);
    return cfg;
}

void apply_env_overrides(RunConfig& cfg) {
    for (const char* key : kKnownKeys) {
        std::string env_name = "HOPFCRF_";
        for (const char* c = key; *c; ++c)
            env_name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
        if (const char* v = std::getenv(env_name.c_str()))
            apply_key_value(cfg, key, v);
    }
}

void validate_config(const RunConfig& cfg) {
    if (!(cfg.abs_alpha > 0.0) || !(cfg.abs_beta > 0.0))
        throw ConfigError("abs_alpha/abs_beta: moduli are required");
    if (!(cfg.abs_alpha > 1.0 && cfg.abs_alpha <= cfg.abs_beta))
        throw ConfigError("abs_alpha/abs_beta: need 1 < abs_alpha <= abs_beta");
    if (cfg.n_u < 8 || cfg.n_sigma < 8)
        throw ConfigError("n_u/n_sigma: grids must be at least 8 in each direction");
    if (!(cfg.t_max > 0.0 && cfg.t_max < 0.5))
        throw ConfigError("t_max: out of range (flow exists only up to 1/2)");
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 2.0))
        throw ConfigError("cfl: out of range (0, 2]");
    if (!(cfg.monitor_cadence > 0.0 && cfg.monitor_cadence < 0.5))
        throw ConfigError("monitor_cadence: out of range (0, 0.5)");
    if (cfg.initial_family != "zero" && cfg.initial_family != "cos-bump" &&
        cfg.initial_family != "file")
        throw ConfigError("initial_family: must be zero, cos-bump, or file");
    if (cfg.initial_family == "file" && cfg.initial_path.empty())
        throw ConfigError("initial_path: required for initial_family = file");
    if (!std::isfinite(cfg.initial_epsilon))
        throw ConfigError("initial_epsilon: must be finite");
    if (!(cfg.diag_A > 0.0) || !(cfg.diag_B > 0.0))
        throw ConfigError("diag_A/diag_B: must be positive");
    if (cfg.threads < 0) throw ConfigError("threads: must be >= 0 (0 = auto)");
    if (cfg.verify_samples < 1 || cfg.verify_fd_samples < 1)
        throw ConfigError("verify_samples/verify_fd_samples: must be >= 1");
    if (cfg.hessian_variant != "corrected" && cfg.hessian_variant != "printed")
        throw ConfigError("hessian_variant: must be corrected or printed");
    for (double ts : cfg.snapshot_times)
        if (!(ts > 0.0 && ts < cfg.t_max))
            throw ConfigError("snapshot_times: entries must lie in (0, t_max)");
}

RunConfig preset_config(const std::string& name) {
    RunConfig cfg;
    if (name == "round") {
        cfg.abs_alpha = 2.0;
        cfg.abs_beta = 2.0;
    } else if (name == "asym") {
        cfg.abs_alpha = 2.0;
        cfg.abs_beta = 4.0;
    } else {
        throw ConfigError("unknown preset '" + name + "' (round, asym)");
    }
    return cfg;
}

}  // namespace hopf
