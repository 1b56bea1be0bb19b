#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlaf/forcing.hpp"
#include "mlaf/initial.hpp"
#include "mlaf/model.hpp"

namespace mlaf {

enum class InitialKind { Random, TaylorGreen, Zero };

struct RunConfig {
    struct Grid {
        int n = 32;
        double L = 6.283185307179586;
    } grid;
    ModelParams model{0.05, 0.2, ModelKind::MlAlpha};
    ForcingSpec forcing{3, 1.0, 1};
    struct Time {
        double t_end = 1.0;
        int output_every = 5;           ///< steps between diagnostic samples
        std::optional<double> spinup;   ///< unset: 5 l / U, capped at t_end / 2
        std::optional<double> dt;       ///< unset: kDtSafety * cfl_dt(initial state)
        int checkpoint_every = 0;       ///< steps; 0 writes only the final checkpoint
    } time;
    struct Diagnostics {
        int N_max = 6;
        double ladder_C_ref = 5.0;      ///< rung N is tested at ladder_C_ref * 2^N
    } diagnostics;
    struct Paths {
        std::string outdir = "out";
    } paths;
    struct Initial {
        InitialKind kind = InitialKind::Random;
        double amplitude = 1.0;
        int kmax = 4;
        double kpeak = 2.0;
        std::uint64_t seed = 7;
    } initial;

    /// Throws ConfigError naming the first offending key.
    void validate() const;
};

std::string to_string(InitialKind kind);

/// INI text with sections [grid] [model] [forcing] [time] [diagnostics]
/// [paths] [initial]. Missing keys keep their defaults; unknown keys and
/// unparsable values raise ConfigError naming "section.key".
RunConfig parse_config(std::istream& in);
RunConfig parse_config_string(const std::string& text);
RunConfig load_config(const std::string& path);

/// Every effective key as ("section.key", value) in a fixed order; values use
/// round-trip precision so parse_config(render_config(c)) == c.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& config);
std::string render_config(const RunConfig& config);

/// Helpers built from a validated config.
TorusGrid config_grid(const RunConfig& config);
double config_ell(const RunConfig& config);

} // namespace mlaf
