#include "mlaf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mlaf/error.hpp"

namespace mlaf::oracle {

namespace {

int iabs(int v) { return v < 0 ? -v : v; }

void require_small(int n) {
    if (n > kMaxDenseN || n < 2 || n % 2 != 0) {
        throw DomainError("oracle: grid n = " + std::to_string(n) + " outside [2, " +
                          std::to_string(kMaxDenseN) + "]");
    }
}

void require_same(const DenseField& a, const DenseField& b) {
    if (a.n() != b.n() || a.length() != b.length()) {
        throw ShapeError("oracle: fields on different lattices");
    }
}

DenseField combine(const DenseField& x, double s, const DenseField& y) {
    DenseField out = x;
    out.for_each([&](const Mode& m) {
        for (int c = 0; c < 3; ++c) {
            out.at(c, m) += s * y.at(c, m);
        }
    });
    return out;
}

} // namespace

DenseField::DenseField(int n, double length) : n_(n), length_(length) {
    require_small(n);
    for (auto& d : data_) {
        d.assign(static_cast<std::size_t>(n) * n * n, Complex{});
    }
}

double DenseField::k0() const { return 2.0 * std::numbers::pi / length_; }

bool DenseField::in_mask(const Mode& m) const {
    const int c = cut();
    return iabs(m[0]) <= c && iabs(m[1]) <= c && iabs(m[2]) <= c;
}

std::size_t DenseField::offset(const Mode& m) const {
    const int h = n_ / 2;
    for (int v : m) {
        if (v < -h || v >= h) {
            throw DomainError("oracle: mode outside lattice");
        }
    }
    return (static_cast<std::size_t>(m[0] + h) * n_ + (m[1] + h)) * n_ + (m[2] + h);
}

DenseField to_dense(const SpectralVectorField& field) {
    const TorusGrid& g = field.grid();
    DenseField out(g.n(), g.length());
    out.for_each([&](const Mode& m) {
        for (int c = 0; c < 3; ++c) {
            out.at(c, m) = field.mode(c, m);
        }
    });
    return out;
}

SpectralVectorField from_dense(const DenseField& dense, const TorusGrid& grid) {
    if (grid.n() != dense.n() || grid.length() != dense.length()) {
        throw ShapeError("oracle: grid does not match dense field");
    }
    SpectralVectorField out(grid);
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double) {
        for (int c = 0; c < 3; ++c) {
            out(c, idx) = dense.at(c, m);
        }
    });
    return out;
}

DenseField dense_advection(const DenseField& a, const DenseField& b) {
    require_same(a, b);
    const double k0 = a.k0();
    DenseField out(a.n(), a.length());
    std::vector<Mode> kept;
    a.for_each([&](const Mode& m) {
        if (a.in_mask(m)) {
            kept.push_back(m);
        }
    });
    for (const Mode& p : kept) {
        for (const Mode& q : kept) {
            const Mode k{p[0] + q[0], p[1] + q[1], p[2] + q[2]};
            if (!out.in_mask(k)) {
                continue;
            }
            const Complex adotq = k0 * (a.at(0, p) * static_cast<double>(q[0]) +
                                        a.at(1, p) * static_cast<double>(q[1]) +
                                        a.at(2, p) * static_cast<double>(q[2]));
            const Complex coef = Complex(0.0, 1.0) * adotq;
            for (int c = 0; c < 3; ++c) {
                out.at(c, k) += coef * b.at(c, q);
            }
        }
    }
    return out;
}

DenseField dense_project(const DenseField& u) {
    DenseField out = u;
    out.for_each([&](const Mode& m) {
        const double k2 = static_cast<double>(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
        if (k2 == 0.0) {
            for (int c = 0; c < 3; ++c) {
                out.at(c, m) = Complex{};
            }
            return;
        }
        Complex dot{};
        for (int c = 0; c < 3; ++c) {
            dot += static_cast<double>(m[c]) * u.at(c, m);
        }
        for (int c = 0; c < 3; ++c) {
            out.at(c, m) = u.at(c, m) - static_cast<double>(m[c]) * dot / k2;
        }
    });
    return out;
}

DenseField dense_nonlinear(const DenseField& a, const DenseField& b) {
    return dense_project(dense_advection(a, b));
}

DenseField dense_filter(const DenseField& u, double alpha) {
    DenseField out = u;
    const double k0 = u.k0();
    out.for_each([&](const Mode& m) {
        const double k2 = k0 * k0 * (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
        for (int c = 0; c < 3; ++c) {
            out.at(c, m) = u.at(c, m) / (1.0 + alpha * alpha * k2);
        }
    });
    return out;
}

std::vector<double> dense_moments(const DenseField& u, int max_order) {
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
    const double k0 = u.k0();
    u.for_each([&](const Mode& m) {
        const double k2 = k0 * k0 * (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
        double amp = 0.0;
        for (int c = 0; c < 3; ++c) {
            amp += std::norm(u.at(c, m));
        }
        for (int order = 0; order <= max_order; ++order) {
            out[order] += std::pow(k2, order) * amp;
        }
    });
    const double vol = u.length() * u.length() * u.length();
    for (double& v : out) {
        v *= vol;
    }
    return out;
}

double dense_inner(const DenseField& a, const DenseField& b) {
    require_same(a, b);
    double acc = 0.0;
    a.for_each([&](const Mode& m) {
        for (int c = 0; c < 3; ++c) {
            acc += std::real(a.at(c, m) * std::conj(b.at(c, m)));
        }
    });
    return acc * a.length() * a.length() * a.length();
}

DenseField dense_rhs(const DenseField& u, const ModelParams& params, const DenseField& f) {
    const DenseField ubar = dense_filter(u, params.filter_alpha());
    DenseField nl(u.n(), u.length());
    switch (params.kind) {
    case ModelKind::MlAlpha: nl = dense_nonlinear(u, ubar); break;
    case ModelKind::LerayAlpha: nl = dense_nonlinear(ubar, u); break;
    case ModelKind::Nse: nl = dense_nonlinear(u, u); break;
    }
    DenseField out = f;
    const double k0 = u.k0();
    out.for_each([&](const Mode& m) {
        const double k2 = k0 * k0 * (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
        for (int c = 0; c < 3; ++c) {
            out.at(c, m) += -nl.at(c, m) - params.nu * k2 * u.at(c, m);
        }
    });
    return out;
}

DenseField reference_integrate(const DenseField& u0, const ModelParams& params,
                               const DenseField& f, double dt, int steps) {
    DenseField u = u0;
    for (int s = 0; s < steps; ++s) {
        const DenseField k1 = dense_rhs(u, params, f);
        const DenseField k2 = dense_rhs(combine(u, 0.5 * dt, k1), params, f);
        const DenseField k3 = dense_rhs(combine(u, 0.5 * dt, k2), params, f);
        const DenseField k4 = dense_rhs(combine(u, dt, k3), params, f);
        u.for_each([&](const Mode& m) {
            for (int c = 0; c < 3; ++c) {
                u.at(c, m) += dt / 6.0 *
                              (k1.at(c, m) + 2.0 * k2.at(c, m) + 2.0 * k3.at(c, m) + k4.at(c, m));
            }
        });
    }
    return u;
}

double max_abs_difference(const DenseField& x, const DenseField& y) {
    require_same(x, y);
    double out = 0.0;
    x.for_each([&](const Mode& m) {
        for (int c = 0; c < 3; ++c) {
            out = std::max(out, std::abs(x.at(c, m) - y.at(c, m)));
        }
    });
    return out;
}

double max_abs(const DenseField& x) {
    double out = 0.0;
    x.for_each([&](const Mode& m) {
        for (int c = 0; c < 3; ++c) {
            out = std::max(out, std::abs(x.at(c, m)));
        }
    });
    return out;
}

} // namespace mlaf::oracle
