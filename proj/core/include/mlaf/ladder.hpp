#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mlaf/diagnostics.hpp"

namespace mlaf {

/// Relative slack granted to identities that hold up to rounding only.
inline constexpr double kRoundoffSlack = 1e-10;

/// Run-level constants the ladder forms need.
struct LadderInputs {
    double nu = 0.0;
    double alpha = 0.0;   ///< filter width actually applied
    double tau = 0.0;     ///< forcing time scale (0 when undefined)
    double re = 0.0;      ///< run Reynolds number, for the J-form Re ln Re term
    double ell = 1.0;     ///< forcing length
    double c_ref = 0.0;   ///< reference constant C_N tested for pass/fail
};

/// Verdict for one ladder rung N.
///
/// Y-form: 1/2 dY_N/dt + nu (Hbar_{N+1} + alpha^2 Hbar_{N+2}) - Hbar_N^{1/2} Phi_N^{1/2}
///          <= C_N ||grad ubar||_inf Y_N,  with Y_N = Hbar_N + alpha^2 Hbar_{N+1}.
/// J-form: 1/2 dJ_N/dt + nu J_N^{1+1/p} / J_{N-p}^{1/p} - nu l^{-2} Re ln Re J_N
///          <= C ||grad ubar||_inf J_N, for p in {1, N}. For N = 0 the fitted
///          constant multiplies nu l^{-2} Re ln Re J_0 instead (p = 0 entry).
struct LadderReport {
    int order = 0;
    double c_ref = 0.0;
    std::size_t samples = 0;
    double pass_fraction = 0.0;
    /// max over samples of [bracket]_+ / (||grad ubar||_inf Y_N)
    double fitted_c = 0.0;
    /// (p, fitted constant) for the J-form
    std::vector<std::pair<int, double>> fitted_c_j;
    /// largest relative gap between the exact dY_N/dt and a centered finite
    /// difference of the sampled Y_N, over every tenth interior sample
    double fd_max_rel_error = 0.0;
};

/// Throws DomainError for fewer than three samples or N > N_max - 2.
LadderReport ladder_check(std::span<const DiagnosticsRecord> series, int order,
                          const LadderInputs& inputs);

/// Reference constant used when none is configured: prefactor * 2^N (0 for N = 0).
double reference_constant(int order, double prefactor);

} // namespace mlaf
