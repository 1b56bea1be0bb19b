#include "mlaf/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "mlaf/error.hpp"
#include "mlaf/spectral_ops.hpp"
#include "mlaf/transform.hpp"

namespace mlaf {

CflError::CflError(double requested, double admissible)
    : Error([&] {
          std::ostringstream os;
          os.precision(6);
          os << "time step " << requested << " exceeds the CFL limit; admissible dt <= "
             << admissible;
          return os.str();
      }()),
      requested_(requested), admissible_(admissible) {}

namespace {

// out = factor(k) * in, per mode.
void scale_modes(SpectralVectorField& field, const std::vector<double>& factor) {
    for (int c = 0; c < 3; ++c) {
        auto comp = field.component(c);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            comp[i] *= factor[i];
        }
    }
}

std::vector<double> decay_factors(const TorusGrid& grid, double nu, double h) {
    std::vector<double> out(grid.spectral_size());
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double) {
        out[idx] = std::exp(-nu * mode_norm2(grid, m) * h);
    });
    return out;
}

struct DecayFactors {
    int n = 0;
    double length = 0.0;
    double nu = 0.0;
    double dt = 0.0;
    std::vector<double> full; ///< exp(-nu k^2 dt)
    std::vector<double> half; ///< exp(-nu k^2 dt / 2)
    std::vector<double> back; ///< exp(+nu k^2 dt / 2)
};

// Runs use one dt throughout, so the last factors are almost always reused.
const DecayFactors& decay_factors_for(const TorusGrid& grid, double nu, double dt) {
    thread_local DecayFactors cached;
    if (cached.n != grid.n() || cached.length != grid.length() || cached.nu != nu ||
        cached.dt != dt) {
        cached.n = grid.n();
        cached.length = grid.length();
        cached.nu = nu;
        cached.dt = dt;
        cached.full = decay_factors(grid, nu, dt);
        cached.half = decay_factors(grid, nu, 0.5 * dt);
        cached.back.resize(cached.half.size());
        for (std::size_t i = 0; i < cached.half.size(); ++i) {
            cached.back[i] = 1.0 / cached.half[i];
        }
    }
    return cached;
}

SpectralVectorField stage_tendency(const SpectralVectorField& u, const SimState& state,
                                   const StepOptions& options) {
    if (options.linear_only) {
        return state.f;
    }
    return explicit_tendency(u, state.params, state.f);
}

} // namespace

double cfl_dt(const SimState& state) {
    const TorusGrid& grid = state.u.grid();
    const PhysicalVectorField v = to_physical(state.u);
    double vmax2 = 0.0;
    for (std::size_t p = 0; p < grid.physical_size(); ++p) {
        const double a = v.component(0)[p];
        const double b = v.component(1)[p];
        const double c = v.component(2)[p];
        vmax2 = std::max(vmax2, a * a + b * b + c * c);
    }
    const double floor = 1e-12 * state.params.nu / grid.length();
    return kCflNumber * grid.dx() / std::max(std::sqrt(vmax2), floor);
}

SimState step(const SimState& state, double dt, const StepOptions& options) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw DomainError("step: dt must be positive and finite");
    }
    if (options.check_cfl) {
        const double admissible = cfl_dt(state);
        if (dt > admissible) {
            throw CflError(dt, admissible);
        }
    }
    const DecayFactors& decay = decay_factors_for(state.u.grid(), state.params.nu, dt);
    const std::vector<double>& e_full = decay.full;
    const std::vector<double>& e_half = decay.half;
    const std::vector<double>& e_back = decay.back;

    const SpectralVectorField& u0 = state.u;

    // u1 = E(dt) (u0 + dt N(u0))
    SpectralVectorField u1 = u0;
    u1.axpy(dt, stage_tendency(u0, state, options));
    scale_modes(u1, e_full);

    // u2 = 3/4 E(dt/2) u0 + 1/4 E(-dt/2) (u1 + dt N(u1))
    SpectralVectorField w = u1;
    w.axpy(dt, stage_tendency(u1, state, options));
    scale_modes(w, e_back);
    SpectralVectorField u2 = u0;
    scale_modes(u2, e_half);
    u2 *= 0.75;
    u2.axpy(0.25, w);

    // u3 = 1/3 E(dt) u0 + 2/3 E(dt/2) (u2 + dt N(u2))
    w = u2;
    w.axpy(dt, stage_tendency(u2, state, options));
    scale_modes(w, e_half);
    SpectralVectorField u3 = u0;
    scale_modes(u3, e_full);
    u3 *= 1.0 / 3.0;
    u3.axpy(2.0 / 3.0, w);

    SimState next{state.t + dt, project_solenoidal(u3), state.params, state.f, state.step + 1};
    return next;
}

} // namespace mlaf
