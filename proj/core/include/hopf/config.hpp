#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key = value run configuration. Moduli are required; everything else
/// has a documented default. Unknown keys are rejected.
struct RunConfig {
    double abs_alpha = 0.0;  // required
    double abs_beta = 0.0;   // required

    int n_u = 64;
    int n_sigma = 64;
    double t_max = 0.49;
    double cfl = 0.2;
    double monitor_cadence = 0.01;

    std::string initial_family = "zero";  // zero | cos-bump | file
    double initial_epsilon = 0.01;
    std::string initial_path;

    double diag_A = 10.0;
    double diag_B = 10.0;

    std::uint64_t seed = 42;
    int threads = 0;  // 0 = auto
    std::string out_dir = "out";

    long verify_samples = 1000;
    long verify_fd_samples = 100;
    std::string hessian_variant = "corrected";  // corrected | printed

    std::vector<double> snapshot_times;
    std::vector<double> sweep_alpha;
    std::vector<double> sweep_beta;
};

/// Parses key = value text ('#' comments, blank lines allowed). Reports parse
/// errors with the line number and range violations with the key name. Moduli
/// must be present after all sources are merged; call validate_config for
/// that final check.
RunConfig parse_config(const std::string& text);

/// Same, but merging on top of an existing config (used for file-over-preset).
void apply_config_text(RunConfig& cfg, const std::string& text);

/// Applies HOPFCRF_<UPPERCASED_KEY> environment overrides, e.g. HOPFCRF_T_MAX.
void apply_env_overrides(RunConfig& cfg);

/// Applies one key = value assignment (also the env/CLI override path).
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

/// Range and cross-field checks; throws ConfigError naming the offending key.
void validate_config(const RunConfig& cfg);

/// Built-in presets: "round" = (2, 2), "asym" = (2, 4).
RunConfig preset_config(const std::string& name);

}  // namespace hopf
