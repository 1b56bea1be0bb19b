#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mlaf/field.hpp"

namespace mlaf {

enum class ModelKind { MlAlpha, LerayAlpha, Nse };

std::string to_string(ModelKind kind);
/// Accepts "ml-alpha", "leray-alpha", "nse".
ModelKind parse_model_kind(std::string_view text);

struct ModelParams {
    double nu = 0.0;
    double alpha = 0.0;
    ModelKind kind = ModelKind::MlAlpha;

    /// Filter width actually applied: 0 for the Navier-Stokes kind.
    double filter_alpha() const { return kind == ModelKind::Nse ? 0.0 : alpha; }
    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// ubar(k) = u(k) / (1 + alpha^2 |k|^2).
SpectralVectorField helmholtz_filter(const SpectralVectorField& u, double alpha);

/// u(k) = (1 + alpha^2 |k|^2) ubar(k).
SpectralVectorField unfilter(const SpectralVectorField& ubar, double alpha);

/// Hbar_N = L^3 sum |k|^{2N} |u(k)|^2 / (1 + alpha^2 |k|^2)^2, N = 0..max_order,
/// evaluated without forming the filtered field.
std::vector<double> filtered_moments(const SpectralVectorField& u, double alpha, int max_order);

/// P[(a.grad) b], dealiased, with (a, b) = (u, ubar) for ML-alpha,
/// (ubar, u) for Leray-alpha and (u, u) for Navier-Stokes.
SpectralVectorField nonlinear_term(ModelKind kind, const SpectralVectorField& u,
                                   const SpectralVectorField& ubar);

/// du/dt split into the part integrators treat explicitly
/// (-nonlinear + forcing) and the viscous part nu * laplacian(u).
struct Tendency {
    SpectralVectorField explicit_part;
    SpectralVectorField viscous;

    SpectralVectorField total() const { return explicit_part + viscous; }
};

/// Relative divergence above which a forcing field is rejected.
inline constexpr double kSolenoidalTolerance = 1e-12;

/// Right-hand side with the pressure eliminated by projection. Throws
/// DomainError if f is not divergence-free.
Tendency rhs(const SpectralVectorField& u, const ModelParams& params,
             const SpectralVectorField& f);

/// -nonlinear + f without the forcing check; used inside time stepping.
SpectralVectorField explicit_tendency(const SpectralVectorField& u, const ModelParams& params,
                                      const SpectralVectorField& f);

} // namespace mlaf
