#include "mlaf/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlaf/error.hpp"
#include "mlaf/fault.hpp"
#include "mlaf/transform.hpp"

namespace mlaf {

namespace fault {
Flags& flags() {
    static Flags f;
    return f;
}
} // namespace fault

namespace {

void require_same_grid(const SpectralVectorField& a, const SpectralVectorField& b) {
    if (!(a.grid() == b.grid())) {
        throw ShapeError("fields live on different grids");
    }
}

// d/dx_axis of one spectral component into out.
void spectral_derivative(const TorusGrid& grid, std::span<const Complex> in, int axis,
                         std::span<Complex> out) {
    const int n = grid.n();
    const int nzh = grid.nz_half();
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            for (int iz = 0; iz < nzh; ++iz, ++idx) {
                const int i = axis == 0 ? ix : (axis == 1 ? iy : iz);
                const double k = grid.derivative_wavenumber(i);
                out[idx] = Complex(-k * in[idx].imag(), k * in[idx].real());
            }
        }
    }
}

void apply_mask(SpectralVectorField& field) {
    const TorusGrid& grid = field.grid();
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double) {
        if (!grid.in_mask(m)) {
            for (int c = 0; c < 3; ++c) {
                field(c, idx) = Complex{};
            }
        }
    });
}

SpectralVectorField masked_input(const SpectralVectorField& field) {
    if (fault::flags().skip_dealias) {
        return field;
    }
    return truncate_to_mask(field);
}

} // namespace

SpectralVectorField project_solenoidal(const SpectralVectorField& field) {
    SpectralVectorField out = field;
    if (fault::flags().skip_projection) {
        return out;
    }
    const double k0 = field.grid().k0();
    for_each_mode(field.grid(), [&](std::size_t idx, const Mode& m, double) {
        const double kx = k0 * m[0];
        const double ky = k0 * m[1];
        const double kz = k0 * m[2];
        const double k2 = kx * kx + ky * ky + kz * kz;
        if (k2 == 0.0) {
            for (int c = 0; c < 3; ++c) {
                out(c, idx) = Complex{};
            }
            return;
        }
        const Complex kdotu = kx * out(0, idx) + ky * out(1, idx) + kz * out(2, idx);
        const Complex s = kdotu / k2;
        out(0, idx) -= kx * s;
        out(1, idx) -= ky * s;
        out(2, idx) -= kz * s;
    });
    return out;
}

double divergence_residual(const SpectralVectorField& field) {
    const double k0 = field.grid().k0();
    double num = 0.0;
    double den = 0.0;
    for_each_mode(field.grid(), [&](std::size_t idx, const Mode& m, double w) {
        const double kx = k0 * m[0];
        const double ky = k0 * m[1];
        const double kz = k0 * m[2];
        const Complex kdotu = kx * field(0, idx) + ky * field(1, idx) + kz * field(2, idx);
        num += w * std::norm(kdotu);
        den += w * (kx * kx + ky * ky + kz * kz) *
               (std::norm(field(0, idx)) + std::norm(field(1, idx)) + std::norm(field(2, idx)));
    });
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

SpectralVectorField truncate_to_mask(const SpectralVectorField& field) {
    SpectralVectorField out = field;
    apply_mask(out);
    return out;
}

std::vector<double> sobolev_moments(const SpectralVectorField& field, int max_order) {
    if (max_order < 0) {
        throw DomainError("moment order must be >= 0");
    }
    std::vector<double> acc(static_cast<std::size_t>(max_order) + 1, 0.0);
    const TorusGrid& grid = field.grid();
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double w) {
        const double amp =
            std::norm(field(0, idx)) + std::norm(field(1, idx)) + std::norm(field(2, idx));
        if (amp == 0.0) {
            return;
        }
        const double k2 = mode_norm2(grid, m);
        double term = w * amp;
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

double sobolev_moment(const SpectralVectorField& field, int order, int max_order) {
    if (order < 0 || order > max_order) {
        throw DomainError("moment order " + std::to_string(order) +
                          " outside supported range [0, " + std::to_string(max_order) + "]");
    }
    return sobolev_moments(field, order).back();
}

double inner_product(const SpectralVectorField& a, const SpectralVectorField& b, int order) {
    require_same_grid(a, b);
    const TorusGrid& grid = a.grid();
    double acc = 0.0;
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double w) {
        double term = 0.0;
        for (int c = 0; c < 3; ++c) {
            const Complex x = a(c, idx);
            const Complex y = b(c, idx);
            term += x.real() * y.real() + x.imag() * y.imag();
        }
        if (order > 0) {
            term *= std::pow(mode_norm2(grid, m), order);
        }
        acc += w * term;
    });
    return acc * grid.volume();
}

std::array<std::vector<double>, 9> gradient_samples(const SpectralVectorField& field) {
    const TorusGrid& grid = field.grid();
    std::array<std::vector<double>, 9> out;
    std::vector<Complex> scratch(grid.spectral_size());
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            auto& dst = out[3 * i + j];
            dst.resize(grid.physical_size());
            spectral_derivative(grid, field.component(i), j, scratch);
            inverse_transform(grid, scratch, dst);
        }
    }
    return out;
}

SupNorms sup_norms(const SpectralVectorField& field) {
    const TorusGrid& grid = field.grid();
    const PhysicalVectorField v = to_physical(field);
    const auto grad = gradient_samples(field);
    SupNorms out;
    for (std::size_t p = 0; p < grid.physical_size(); ++p) {
        const double a = v.component(0)[p];
        const double b = v.component(1)[p];
        const double c = v.component(2)[p];
        out.value = std::max(out.value, a * a + b * b + c * c);
        double g2 = 0.0;
        for (const auto& g : grad) {
            g2 += g[p] * g[p];
        }
        out.gradient = std::max(out.gradient, g2);
    }
    out.value = std::sqrt(out.value);
    out.gradient = std::sqrt(out.gradient);
    return out;
}

SpectralVectorField dealiased_product(const SpectralVectorField& a, const SpectralVectorField& b) {
    require_same_grid(a, b);
    const TorusGrid& grid = a.grid();
    const PhysicalVectorField pa = to_physical(masked_input(a));
    const PhysicalVectorField pb = to_physical(masked_input(b));
    PhysicalVectorField prod(grid);
    for (int c = 0; c < 3; ++c) {
        auto dst = prod.component(c);
        auto x = pa.component(c);
        auto y = pb.component(c);
        for (std::size_t p = 0; p < dst.size(); ++p) {
            dst[p] = x[p] * y[p];
        }
    }
    SpectralVectorField out = to_spectral(prod);
    if (!fault::flags().skip_dealias) {
        apply_mask(out);
    }
    return out;
}

SpectralVectorField dealiased_advection(const SpectralVectorField& a,
                                        const SpectralVectorField& b) {
    require_same_grid(a, b);
    const TorusGrid& grid = a.grid();
    const SpectralVectorField bm = masked_input(b);
    const PhysicalVectorField pa = to_physical(masked_input(a));

    std::vector<Complex> dcoef(grid.spectral_size());
    std::vector<double> dsamp(grid.physical_size());
    std::vector<double> acc(grid.physical_size());
    SpectralVectorField out(grid);
    for (int i = 0; i < 3; ++i) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int j = 0; j < 3; ++j) {
            spectral_derivative(grid, bm.component(i), j, dcoef);
            inverse_transform(grid, dcoef, dsamp);
            const auto aj = pa.component(j);
            for (std::size_t p = 0; p < acc.size(); ++p) {
                acc[p] += aj[p] * dsamp[p];
            }
        }
        forward_transform(grid, acc, out.component(i));
    }
    if (!fault::flags().skip_dealias) {
        apply_mask(out);
    }
    return out;
}

} // namespace mlaf
