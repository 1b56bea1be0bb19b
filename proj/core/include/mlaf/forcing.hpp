#pragma once

#include <cstdint>

#include "mlaf/field.hpp"

namespace mlaf {

/// Time-independent force supported on the lattice shell |m|^2 = shell_m^2.
struct ForcingSpec {
    int shell_m = 2;
    double amplitude = 0.0; ///< target f_rms = L^{-3/2} ||f||_{L2}
    std::uint64_t seed = 0;
};

/// Forcing length scale l = 1 / (k0 * shell_m), so ||grad^n f|| = l^{-n} ||f||.
double forcing_length(const TorusGrid& grid, int shell_m);

/// Divergence-free, zero-mean force on a single exact shell, with a seeded
/// random phase and polarization per mode. Throws ConfigError when the shell
/// lies outside [2, dealias_cut - 1].
SpectralVectorField narrowband_force(const TorusGrid& grid, const ForcingSpec& spec);

/// f_rms = L^{-3/2} ||f||_{L2}.
double rms_amplitude(const SpectralVectorField& f);

/// Gr = l^3 f_rms / nu^2.
double grashof(double f_rms, double ell, double nu);
double grashof(const SpectralVectorField& f, double ell, double nu);

} // namespace mlaf
