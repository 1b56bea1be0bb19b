#include "mlaf/initial.hpp"

#include <cmath>
#include <string>

#include "mlaf/error.hpp"
#include "mlaf/rng.hpp"
#include "mlaf/spectral_ops.hpp"

namespace mlaf {

SpectralVectorField taylor_green(const TorusGrid& grid, double amplitude) {
    SpectralVectorField u(grid);
    const double q = amplitude / 8.0;
    for (int sx : {-1, 1}) {
        for (int sy : {-1, 1}) {
            for (int sz : {-1, 1}) {
                // sin -> -i s / 2 and cos -> 1 / 2 per exponential.
                const Mode m{sx, sy, sz};
                u.set_mode(0, m, Complex(0.0, -sx * q));
                u.set_mode(1, m, Complex(0.0, sy * q));
            }
        }
    }
    return u;
}

SpectralVectorField single_mode(const TorusGrid& grid, double amplitude, int m) {
    SpectralVectorField u(grid);
    u.set_mode(0, Mode{0, 0, m}, Complex(0.0, -0.5 * amplitude));
    return u;
}

SpectralVectorField random_solenoidal(const TorusGrid& grid, const RandomFieldSpec& spec) {
    if (spec.kmax < 1 || spec.kmax > grid.dealias_cut()) {
        throw ConfigError("initial.kmax: must lie in [1, " + std::to_string(grid.dealias_cut()) +
                          "], got " + std::to_string(spec.kmax));
    }
    if (!(spec.rms >= 0.0)) {
        throw ConfigError("initial.amplitude: must be >= 0");
    }
    SpectralVectorField u(grid);
    StreamRng rng(spec.seed, 1);
    const int K = spec.kmax;
    for (int mz = 0; mz <= K; ++mz) {
        for (int my = -K; my <= K; ++my) {
            for (int mx = -K; mx <= K; ++mx) {
                const bool upper = mz > 0 || my > 0 || (my == 0 && mx > 0);
                if (!upper) {
                    continue;
                }
                const double m2 = double(mx * mx + my * my + mz * mz);
                const double env = std::exp(-0.5 * m2 / (spec.kpeak * spec.kpeak));
                for (int c = 0; c < 3; ++c) {
                    const double re = rng.normal();
                    const double im = rng.normal();
                    u.set_mode(c, Mode{mx, my, mz}, env * Complex(re, im));
                }
            }
        }
    }
    u = project_solenoidal(u);
    const double h0 = sobolev_moment(u, 0);
    if (h0 > 0.0) {
        u *= spec.rms / std::sqrt(h0 / grid.volume());
    }
    return u;
}

} // namespace mlaf
