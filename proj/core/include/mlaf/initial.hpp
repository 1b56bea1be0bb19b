#pragma once

#include <cstdint>

#include "mlaf/field.hpp"

namespace mlaf {

/// u = A (sin k0x cos k0y cos k0z, -cos k0x sin k0y cos k0z, 0).
SpectralVectorField taylor_green(const TorusGrid& grid, double amplitude);

/// u = (A sin(k0 m z), 0, 0).
SpectralVectorField single_mode(const TorusGrid& grid, double amplitude, int m = 1);

struct RandomFieldSpec {
    double rms = 1.0;        ///< U = sqrt(L^{-3} ||u||^2)
    int kmax = 4;            ///< populated modes satisfy max_i |m_i| <= kmax
    double kpeak = 2.0;      ///< Gaussian envelope width in lattice units
    std::uint64_t seed = 1;
};

/// Smooth random solenoidal field. Coefficients depend only on the lattice
/// index and the seed, so the same spec yields the same continuous field on
/// every grid that resolves kmax. Throws ConfigError if kmax exceeds the
/// dealias cut.
SpectralVectorField random_solenoidal(const TorusGrid& grid, const RandomFieldSpec& spec);

} // namespace mlaf
