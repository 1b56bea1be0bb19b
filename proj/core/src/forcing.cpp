#include "mlaf/forcing.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mlaf/error.hpp"
#include "mlaf/rng.hpp"
#include "mlaf/spectral_ops.hpp"

namespace mlaf {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& v) {
    const double s = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / s, v[1] / s, v[2] / s};
}

bool upper_half(const Mode& m) {
    return m[2] > 0 || (m[2] == 0 && (m[1] > 0 || (m[1] == 0 && m[0] > 0)));
}

} // namespace

double forcing_length(const TorusGrid& grid, int shell_m) {
    return 1.0 / (grid.k0() * shell_m);
}

SpectralVectorField narrowband_force(const TorusGrid& grid, const ForcingSpec& spec) {
    const int s = spec.shell_m;
    if (s < 2 || s > grid.dealias_cut() - 1) {
        throw ConfigError("forcing.shell_m: must lie in [2, " +
                          std::to_string(grid.dealias_cut() - 1) + "] for n = " +
                          std::to_string(grid.n()) + ", got " + std::to_string(s));
    }
    if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude)) {
        throw ConfigError("forcing.amplitude: must be >= 0");
    }

    std::vector<Mode> shell;
    for (int mx = -s; mx <= s; ++mx) {
        for (int my = -s; my <= s; ++my) {
            for (int mz = -s; mz <= s; ++mz) {
                const Mode m{mx, my, mz};
                if (mx * mx + my * my + mz * mz == s * s && upper_half(m)) {
                    shell.push_back(m);
                }
            }
        }
    }
    if (shell.empty()) {
        throw ConfigError("forcing.shell_m: lattice shell is empty");
    }

    SpectralVectorField f(grid);
    StreamRng rng(spec.seed, 0);
    const double mode_amp = spec.amplitude / std::sqrt(2.0 * static_cast<double>(shell.size()));
    for (const Mode& m : shell) {
        const Vec3 khat = normalized({double(m[0]), double(m[1]), double(m[2])});
        // Reference axis least aligned with k.
        Vec3 ref{0.0, 0.0, 0.0};
        int axis = 0;
        for (int i = 1; i < 3; ++i) {
            if (std::abs(khat[i]) < std::abs(khat[axis])) {
                axis = i;
            }
        }
        ref[axis] = 1.0;
        const Vec3 e1 = normalized(cross(khat, ref));
        const Vec3 e2 = cross(khat, e1);
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        const double phase = 2.0 * std::numbers::pi * rng.uniform();
        const Complex z = std::polar(mode_amp, phase);
        for (int c = 0; c < 3; ++c) {
            f.set_mode(c, m, z * (std::cos(theta) * e1[c] + std::sin(theta) * e2[c]));
        }
    }
    return project_solenoidal(f);
}

double rms_amplitude(const SpectralVectorField& f) {
    return std::sqrt(sobolev_moment(f, 0) / f.grid().volume());
}

double grashof(double f_rms, double ell, double nu) {
    return ell * ell * ell * f_rms / (nu * nu);
}

double grashof(const SpectralVectorField& f, double ell, double nu) {
    return grashof(rms_amplitude(f), ell, nu);
}

} // namespace mlaf
