#pragma once

#include <cstdint>

#include "mlaf/field.hpp"
#include "mlaf/model.hpp"

namespace mlaf {

inline constexpr double kCflNumber = 0.4;
/// Fraction of the initial CFL limit used as the fixed run time step.
inline constexpr double kDtSafety = 0.5;
/// Runs re-check the CFL limit at this step interval.
inline constexpr int kCflRecheckInterval = 100;

struct SimState {
    double t = 0.0;
    SpectralVectorField u;
    ModelParams params;
    SpectralVectorField f;
    std::uint64_t step = 0;
};

struct StepOptions {
    /// Test hook: drop the nonlinear term (forcing and viscosity remain).
    bool linear_only = false;
    /// Skip the CFL precondition; used by convergence studies that control
    /// dt explicitly far below the limit.
    bool check_cfl = true;
};

/// dt = 0.4 * dx / max(||u||_inf, 1e-12 * nu / L).
double cfl_dt(const SimState& state);

/// One integrating-factor SSP-RK3 step: exp(-nu |k|^2 h) is applied exactly
/// per mode, nonlinear and forcing terms explicitly, and the result is
/// re-projected. Throws CflError if dt exceeds cfl_dt(state).
SimState step(const SimState& state, double dt, const StepOptions& options = {});

} // namespace mlaf
