#pragma once

#include <map>
#include <optional>
#include <string>

#include "floqamp/model.hpp"

namespace floqamp {

struct NumericsConfig {
    int n_trunc = 0;  // 0 = auto (default_n_trunc)
    int k_points = 2048;
    int quad_points = 128;
    double ode_rtol = 1e-9;
    double ode_atol = 1e-12;
    int samples_per_period = 256;
    int omega_bar_points = 64;
    double t_span_periods = 0.0;  // 0 = auto
};

struct SweepConfig {
    std::string parameter;
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

struct OutputConfig {
    std::string dir = "out";
    bool csv = true;
    bool svg = false;
};

struct MicroConfig {
    double kappa_b = 0.0;
    double kappa_c = 0.0;
};

struct RunConfig {
    ModelParams model;
    DriveSpec drive;
    NumericsConfig numerics;
    std::optional<SweepConfig> sweep;
    std::optional<MicroConfig> micro;
    OutputConfig output;
    int threads = 0;
    // Fully resolved key/value view, echoed into metadata sidecars.
    std::map<std::string, std::string> resolved;
};

// Flat `key = value` file; '#' starts a comment. Unknown keys are rejected.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Builds and validates a RunConfig; throws ConfigError on any violation.
RunConfig make_run_config(const std::map<std::string, std::string>& kv);

}  // namespace floqamp
