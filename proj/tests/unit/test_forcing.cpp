#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mlaf/error.hpp"
#include "mlaf/forcing.hpp"
#include "mlaf/spectral_ops.hpp"
#include "test_fields.hpp"

namespace mlaf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST(Forcing, SameSeedIsBitIdentical) {
    const TorusGrid g = make_grid(32, kTwoPi);
    const ForcingSpec spec{3, 1.5, 42};
    const SpectralVectorField a = narrowband_force(g, spec);
    const SpectralVectorField b = narrowband_force(g, spec);
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < a.component(c).size(); ++i) {
            ASSERT_EQ(a(c, i), b(c, i));
        }
    }
    const SpectralVectorField other = narrowband_force(g, ForcingSpec{3, 1.5, 43});
    EXPECT_GT(test::max_rel_difference(other, a), 1e-3);
}

TEST(Forcing, SupportedOnExactShell) {
    const TorusGrid g = make_grid(32, 2.0);
    const SpectralVectorField f = narrowband_force(g, ForcingSpec{4, 1.0, 1});
    int populated = 0;
    for_each_mode(g, [&](std::size_t idx, const Mode& m, double) {
        const int m2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2];
        const double mag = std::abs(f(0, idx)) + std::abs(f(1, idx)) + std::abs(f(2, idx));
        if (m2 != 16) {
            EXPECT_EQ(mag, 0.0);
        } else if (mag > 0.0) {
            ++populated;
        }
    });
    EXPECT_GT(populated, 0);
}

TEST(Forcing, ShellIdentityDivergenceAndAmplitude) {
    const TorusGrid g = make_grid(32, 3.0);
    const ForcingSpec spec{5, 0.8, 9};
    const SpectralVectorField f = narrowband_force(g, spec);
    const double ell = forcing_length(g, spec.shell_m);
    EXPECT_DOUBLE_EQ(ell, 1.0 / (g.k0() * 5));
    const auto phi = sobolev_moments(f, 6);
    for (int k = 0; k <= 6; ++k) {
        const double expected = std::pow(ell, -2.0 * k) * phi[0];
        EXPECT_LE(std::abs(phi[k] - expected), 1e-12 * expected) << "N = " << k;
    }
    EXPECT_LE(divergence_residual(f), 1e-13);
    EXPECT_LE(std::abs(rms_amplitude(f) - 0.8), 1e-12 * 0.8);
}

TEST(Forcing, ShellOutsideRangeRejected) {
    const TorusGrid g = make_grid(16, kTwoPi);
    EXPECT_THROW(narrowband_force(g, ForcingSpec{1, 1.0, 1}), ConfigError);
    EXPECT_THROW(narrowband_force(g, ForcingSpec{g.dealias_cut(), 1.0, 1}), ConfigError);
    EXPECT_NO_THROW(narrowband_force(g, ForcingSpec{g.dealias_cut() - 1, 1.0, 1}));
}

TEST(Forcing, ZeroAmplitudeGivesZeroField) {
    const TorusGrid g = make_grid(16, kTwoPi);
    EXPECT_EQ(test::max_abs(narrowband_force(g, ForcingSpec{2, 0.0, 1})), 0.0);
}

TEST(Grashof, Formula) {
    EXPECT_DOUBLE_EQ(grashof(1.0, 1.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(grashof(2.0, 0.5, 0.1), 0.125 * 2.0 / 0.01);
    EXPECT_DOUBLE_EQ(grashof(3.0, 0.7, 0.2), 4.0 * grashof(3.0, 0.7, 0.4));
}

TEST(Grashof, ConstructedForceRecoversAmplitude) {
    const TorusGrid g = make_grid(32, kTwoPi);
    const double a = 2.5;
    const double nu = 0.03;
    const SpectralVectorField f = narrowband_force(g, ForcingSpec{3, a, 5});
    const double ell = forcing_length(g, 3);
    const double expected = ell * ell * ell * a / (nu * nu);
    EXPECT_LE(std::abs(grashof(f, ell, nu) - expected), 1e-12 * expected);
}

} // namespace
} // namespace mlaf
