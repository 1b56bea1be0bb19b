#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mlaf/config.hpp"
#include "mlaf/integrator.hpp"
#include "mlaf/report.hpp"

namespace mlaf {

/// Process exit codes shared by the library drivers and the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,     ///< verification failure or runtime error
    kExitConfig = 2,      ///< invalid configuration or arguments
    kExitInstability = 3, ///< non-finite state or CFL violation during a run
};

/// Forcing field and t = 0 state described by a validated config.
SpectralVectorField make_forcing(const RunConfig& config);
SimState initial_state(const RunConfig& config);

/// Fixed step used by a run: time.dt when set, else kDtSafety * cfl_dt(initial).
double run_time_step(const RunConfig& config, const SimState& initial);

struct SimulateOptions {
    /// Continue from this checkpoint; rows after its time are regenerated.
    std::optional<std::string> resume_from;
    std::ostream* log = nullptr;
    /// Skip report.json (used by callers that analyse the series themselves).
    bool write_report = true;
};

struct SimulateResult {
    int exit_code = kExitOk;
    std::string message;
    std::vector<DiagnosticsRecord> series;
    std::optional<SimState> final_state;
    double dt = 0.0;
    std::optional<RunAnalysis> analysis;
};

/// Writes diagnostics.csv, rates.csv, final.ckpt and report.json under
/// paths.outdir. Throws ConfigError for invalid input; instabilities are
/// reported through exit_code with last_good.ckpt left in outdir.
SimulateResult run_simulate(const RunConfig& config, const SimulateOptions& options = {});

enum class SweepAxis { Alpha, Amplitude };
SweepAxis parse_sweep_axis(const std::string& text);

struct SweepRow {
    double value = 0.0;
    RunAnalysis analysis;
    std::optional<double> rel_diff_alpha0; ///< ||u_alpha - u_0|| / ||u_0|| at t_end
};

struct SweepResult {
    int exit_code = kExitOk;
    std::string message;
    std::vector<SweepRow> rows;
};

/// One run per value under outdir/<axis>_<i>, plus outdir/alpha_ref for the
/// alpha axis, and outdir/sweep_summary.csv. Throws ConfigError for fewer
/// than three values or repeated values.
SweepResult run_sweep(const RunConfig& config, SweepAxis axis, const std::vector<double>& values,
                      std::ostream* log = nullptr);

/// Re-reads diagnostics.csv and rates.csv in dir, rebuilds the config from
/// the echoed header and rewrites report.json.
int run_report(const std::string& dir, std::ostream& err);

} // namespace mlaf
