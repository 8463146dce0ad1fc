#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsest/norms.hpp"
#include "nsest/stokes.hpp"

namespace nsest {

/// Run configuration shared by the CLI commands. Dotted-key text format, one
/// `key = value` per line, '#' comments; unknown keys are rejected before any
/// compute. Every key can also be overridden with --set key=value.
struct RunConfig {
    int grid_n = 17;
    double nu = 1.0;
    std::string forcing_kind = "trig";
    double forcing_amplitude = 0.5;
    std::vector<double> sweep_amplitudes = {0.1, 0.2, 0.5, 1.0};
    double alpha = 0.5;
    double q = 6.0;
    std::uint64_t pair_budget = 4'000'000;
    double tol = 1e-8;
    double inner_tol = 1e-10;
    double div_tol = 1e-8;
    int max_picard = 200;
    double damping = 1.0;
    std::string inner = "fst";
    double stability_tol = 0.1;
    int interp_count = 50;
    std::uint64_t seed = 42;
    std::string output_dir;  // empty = unset; resolution order flag > config > env > "."

    static RunConfig from_file(const std::string& path);
    /// Apply one dotted-key override; throws ConfigError for unknown keys.
    void set(const std::string& key, const std::string& value);
    void validate() const;

    SolverConfig solver_config() const;
    PairScan pair_scan() const;
    std::string resolved_output_dir(const std::string& flag_value) const;
};

} // namespace nsest
