#include "mlaf/model.hpp"

#include <cmath>

#include "mlaf/error.hpp"
#include "mlaf/spectral_ops.hpp"

namespace mlaf {

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::MlAlpha: return "ml-alpha";
    case ModelKind::LerayAlpha: return "leray-alpha";
    case ModelKind::Nse: return "nse";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view text) {
    if (text == "ml-alpha") return ModelKind::MlAlpha;
    if (text == "leray-alpha") return ModelKind::LerayAlpha;
    if (text == "nse") return ModelKind::Nse;
    throw ConfigError("model.kind: expected one of ml-alpha, leray-alpha, nse; got '" +
                      std::string(text) + "'");
}

void ModelParams::validate() const {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw ConfigError("model.nu: must be > 0");
    }
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw ConfigError("model.alpha: must be >= 0");
    }
}

SpectralVectorField helmholtz_filter(const SpectralVectorField& u, double alpha) {
    SpectralVectorField out = u;
    if (alpha == 0.0) {
        return out;
    }
    const double a2 = alpha * alpha;
    for_each_mode(u.grid(), [&](std::size_t idx, const Mode& m, double) {
        const double s = 1.0 / (1.0 + a2 * mode_norm2(u.grid(), m));
        for (int c = 0; c < 3; ++c) {
            out(c, idx) *= s;
        }
    });
    return out;
}

SpectralVectorField unfilter(const SpectralVectorField& ubar, double alpha) {
    SpectralVectorField out = ubar;
    if (alpha == 0.0) {
        return out;
    }
    const double a2 = alpha * alpha;
    for_each_mode(ubar.grid(), [&](std::size_t idx, const Mode& m, double) {
        const double s = 1.0 + a2 * mode_norm2(ubar.grid(), m);
        for (int c = 0; c < 3; ++c) {
            out(c, idx) *= s;
        }
    });
    return out;
}

std::vector<double> filtered_moments(const SpectralVectorField& u, double alpha, int max_order) {
    if (max_order < 0) {
        throw DomainError("moment order must be >= 0");
    }
    const TorusGrid& grid = u.grid();
    const double a2 = alpha * alpha;
    std::vector<double> acc(static_cast<std::size_t>(max_order) + 1, 0.0);
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double w) {
        const double amp = std::norm(u(0, idx)) + std::norm(u(1, idx)) + std::norm(u(2, idx));
        if (amp == 0.0) {
            return;
        }
        const double k2 = mode_norm2(grid, m);
        const double g = 1.0 + a2 * k2;
        double term = w * amp / (g * g);
        acc[0] += term;
        for (int order = 1; order <= max_order; ++order) {
            term *= k2;
            acc[order] += term;
        }
    });
    for (auto& v : acc) {
        v *= grid.volume();
    }
    return acc;
}

SpectralVectorField nonlinear_term(ModelKind kind, const SpectralVectorField& u,
                                   const SpectralVectorField& ubar) {
    if (!(u.grid() == ubar.grid())) {
        throw ShapeError("nonlinear_term: u and ubar live on different grids");
    }
    switch (kind) {
    case ModelKind::MlAlpha: return project_solenoidal(dealiased_advection(u, ubar));
    case ModelKind::LerayAlpha: return project_solenoidal(dealiased_advection(ubar, u));
    case ModelKind::Nse: return project_solenoidal(dealiased_advection(u, u));
    }
    return SpectralVectorField(u.grid());
}

SpectralVectorField explicit_tendency(const SpectralVectorField& u, const ModelParams& params,
                                      const SpectralVectorField& f) {
    const SpectralVectorField ubar = helmholtz_filter(u, params.filter_alpha());
    SpectralVectorField out = f;
    out -= nonlinear_term(params.kind, u, ubar);
    return out;
}

Tendency rhs(const SpectralVectorField& u, const ModelParams& params,
             const SpectralVectorField& f) {
    if (!(u.grid() == f.grid())) {
        throw ShapeError("rhs: state and forcing live on different grids");
    }
    if (divergence_residual(f) > kSolenoidalTolerance) {
        throw DomainError("rhs: forcing is not divergence-free");
    }
    SpectralVectorField viscous = u;
    for_each_mode(u.grid(), [&](std::size_t idx, const Mode& m, double) {
        const double s = -params.nu * mode_norm2(u.grid(), m);
        for (int c = 0; c < 3; ++c) {
            viscous(c, idx) *= s;
        }
    });
    return Tendency{explicit_tendency(u, params, f), std::move(viscous)};
}

} // namespace mlaf
