#pragma once

#include <span>

#include "mlaf/field.hpp"

namespace mlaf {

/// Spectral -> physical samples. Inverse of to_spectral on band-limited data.
PhysicalVectorField to_physical(const SpectralVectorField& field);

/// Physical samples -> Fourier coefficients, normalized so that coeff(m)
/// multiplies exp(i k0 m.x).
SpectralVectorField to_spectral(const PhysicalVectorField& samples);

/// Scalar transforms on caller-owned buffers; sizes must match the grid.
void inverse_transform(const TorusGrid& grid, std::span<const Complex> coeffs,
                       std::span<double> samples);
void forward_transform(const TorusGrid& grid, std::span<const double> samples,
                       std::span<Complex> coeffs);

/// Threads used by newly created transform plans. Defaults to the value of
/// the MLAF_THREADS environment variable, or 1.
int transform_threads();

} // namespace mlaf
