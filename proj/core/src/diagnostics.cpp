#include "mlaf/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "mlaf/error.hpp"
#include "mlaf/spectral_ops.hpp"

namespace mlaf {

DiagnosticsRecord record(const SimState& state, int max_order) {
    if (max_order < 2) {
        throw DomainError("record: max_order must be >= 2");
    }
    const double alpha = state.params.filter_alpha();
    const SpectralVectorField ubar = helmholtz_filter(state.u, alpha);

    DiagnosticsRecord rec;
    rec.t = state.t;
    rec.H = sobolev_moments(state.u, max_order);
    rec.Hbar = sobolev_moments(ubar, max_order);
    rec.Phi = sobolev_moments(state.f, max_order);

    const SupNorms sup = sup_norms(ubar);
    rec.sup_ubar = sup.value;
    rec.sup_grad_ubar = sup.gradient;

    const Tendency tend = rhs(state.u, state.params, state.f);
    const SpectralVectorField total = tend.total();
    const SpectralVectorField dubar = helmholtz_filter(total, alpha);
    rec.dHbar_dt.resize(rec.Hbar.size());
    for (int order = 0; order <= max_order; ++order) {
        rec.dHbar_dt[order] = 2.0 * inner_product(ubar, dubar, order);
    }

    rec.dE_dt = inner_product(total, ubar);
    rec.inj = inner_product(state.f, ubar);
    rec.visc = state.params.nu * (rec.Hbar[1] + alpha * alpha * rec.Hbar[2]);
    rec.nl_transfer = inner_product(state.f - tend.explicit_part, ubar);
    return rec;
}

double tau(double gr, double ell, double nu) {
    if (!(gr > 1.0)) {
        throw DomainError("tau undefined: Gr <= 1");
    }
    return ell * ell / nu / std::sqrt(gr * std::log(gr));
}

double f_moment(const DiagnosticsRecord& rec, int order, double tau_value) {
    if (order < 0 || order > rec.max_order()) {
        throw DomainError("F_N: order outside recorded moments");
    }
    return rec.Hbar[order] + tau_value * rec.Phi[order];
}

double j_moment(const DiagnosticsRecord& rec, int order, double tau_value, double alpha) {
    if (order < 0 || order + 1 > rec.max_order()) {
        throw DomainError("J_N: order + 1 exceeds recorded moments");
    }
    return f_moment(rec, order, tau_value) +
           2.0 * alpha * alpha * f_moment(rec, order + 1, tau_value);
}

double kappa(double j_n, double j_r, int n, int r) {
    if (!(n > r) || r < 0) {
        throw DomainError("kappa: requires N > r >= 0");
    }
    if (!(j_r > 0.0)) {
        throw DomainError("kappa: J_r must be positive");
    }
    return std::pow(j_n / j_r, 1.0 / (2.0 * (n - r)));
}

AverageAccumulator::AverageAccumulator(double spinup, std::size_t width)
    : spinup_(spinup), last_(width, 0.0), integral_(width, 0.0) {}

void AverageAccumulator::add(double t, std::span<const double> values) {
    if (values.size() != last_.size()) {
        throw ShapeError("AverageAccumulator: width mismatch");
    }
    if (t < spinup_) {
        return;
    }
    if (count_ == 0) {
        t_first_ = t;
    } else {
        const double h = t - t_last_;
        for (std::size_t i = 0; i < values.size(); ++i) {
            integral_[i] += 0.5 * h * (values[i] + last_[i]);
        }
    }
    std::copy(values.begin(), values.end(), last_.begin());
    t_last_ = t;
    ++count_;
}

std::vector<double> AverageAccumulator::mean() const {
    if (count_ == 0) {
        throw DomainError("time average: no samples after spinup");
    }
    if (count_ == 1 || t_last_ == t_first_) {
        return last_;
    }
    std::vector<double> out(integral_.size());
    const double span = t_last_ - t_first_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = integral_[i] / span;
    }
    return out;
}

double time_average(std::span<const double> t, std::span<const double> values, double spinup) {
    if (t.size() != values.size()) {
        throw ShapeError("time_average: series length mismatch");
    }
    AverageAccumulator acc(spinup, 1);
    for (std::size_t i = 0; i < t.size(); ++i) {
        acc.add(t[i], values.subspan(i, 1));
    }
    return acc.mean()[0];
}

ReynoldsResult reynolds(double avg_h0, double ell, double nu, double length) {
    ReynoldsResult out;
    out.U = std::sqrt(avg_h0 / (length * length * length));
    out.Re = out.U * ell / nu;
    return out;
}

EnergySpectrum energy_spectrum(const SpectralVectorField& u, double alpha) {
    const TorusGrid& grid = u.grid();
    const int half = grid.n() / 2;
    const auto shells = static_cast<std::size_t>(std::sqrt(3.0) * half) + 2;
    EnergySpectrum out;
    out.k0 = grid.k0();
    out.u.assign(shells, 0.0);
    out.ubar.assign(shells, 0.0);
    const double a2 = alpha * alpha;
    const double scale = 0.5 * grid.volume();
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double w) {
        const double amp = std::norm(u(0, idx)) + std::norm(u(1, idx)) + std::norm(u(2, idx));
        if (amp == 0.0) {
            return;
        }
        const double lattice2 = double(m[0]) * m[0] + double(m[1]) * m[1] + double(m[2]) * m[2];
        const auto s = static_cast<std::size_t>(std::lround(std::sqrt(lattice2)));
        const double g = 1.0 + a2 * mode_norm2(grid, m);
        out.u[s] += scale * w * amp;
        out.ubar[s] += scale * w * amp / (g * g);
    });
    return out;
}

} // namespace mlaf
