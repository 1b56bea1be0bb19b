#pragma once

#include <span>
#include <string>
#include <vector>

#include "mlaf/bounds.hpp"
#include "mlaf/config.hpp"
#include "mlaf/ladder.hpp"

namespace mlaf {

/// Highest ladder rung analysed in run reports.
inline constexpr int kReportMaxRung = 4;

struct RunAnalysis {
    double spinup = 0.0;
    bool spinup_auto = false;
    double f_rms = 0.0;
    std::vector<LadderReport> ladders; ///< rungs 0..min(kReportMaxRung, N_max - 2)
    BoundReport bounds;
    /// max over samples of |<P(a.grad b), ubar>| / (||u|| ||grad ubar|| ||ubar||)
    double skew_residual_max_rel = 0.0;
};

/// Spinup rule used when none is configured: 5 l / U with U from the second
/// half of the series, capped at half the series duration.
double auto_spinup(const RunConfig& config, std::span<const DiagnosticsRecord> series);

RunAnalysis analyze_run(const RunConfig& config, std::span<const DiagnosticsRecord> series);

/// Pretty-printed JSON with the echoed config, the ladder and bound reports,
/// the exponent table and the exact-check verdicts.
std::string report_json(const RunConfig& config, const RunAnalysis& analysis);

} // namespace mlaf
