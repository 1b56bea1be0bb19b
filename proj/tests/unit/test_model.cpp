#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "mlaf/error.hpp"
#include "mlaf/model.hpp"
#include "mlaf/oracle.hpp"
#include "mlaf/spectral_ops.hpp"
#include "mlaf/transform.hpp"
#include "test_fields.hpp"

namespace mlaf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

TEST(Filter, HalvesUnitShellAtAlphaOneOverK0) {
    const TorusGrid g = make_grid(8, 3.0);
    SpectralVectorField u(g);
    u.set_mode(1, {0, 0, 1}, Complex(0.8, -0.6));
    const SpectralVectorField ubar = helmholtz_filter(u, 1.0 / g.k0());
    EXPECT_NEAR(std::abs(ubar.mode(1, {0, 0, 1}) - Complex(0.4, -0.3)), 0.0, 1e-15);
    const SpectralVectorField back = unfilter(u, 1.0 / g.k0());
    EXPECT_NEAR(std::abs(back.mode(1, {0, 0, 1}) - Complex(1.6, -1.2)), 0.0, 1e-15);
}

TEST(Filter, ZeroAlphaIsExactIdentity) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const SpectralVectorField u = test::random_field(g, 3, 7);
    EXPECT_EQ(test::max_rel_difference(helmholtz_filter(u, 0.0), u), 0.0);
}

TEST(Filter, UnfilterInvertsFilter) {
    const TorusGrid g = make_grid(16, 2.0);
    const SpectralVectorField u = test::random_field(g, 4, 7);
    EXPECT_LE(test::max_rel_difference(unfilter(helmholtz_filter(u, 0.37), 0.37), u), 1e-13);
    EXPECT_EQ(test::max_abs(unfilter(SpectralVectorField(g), 0.37)), 0.0);
}

TEST(Filter, MomentRoutesAgree) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const SpectralVectorField u = test::random_field(g, 6, 7);
    for (double alpha : {0.0, 0.05, 0.3, 1.0}) {
        const auto direct = filtered_moments(u, alpha, 6);
        const auto via = sobolev_moments(helmholtz_filter(u, alpha), 6);
        for (int k = 0; k <= 6; ++k) {
            EXPECT_LE(std::abs(direct[k] - via[k]), 1e-12 * via[k]) << "alpha " << alpha << " N " << k;
        }
    }
}

TEST(Filter, CommutesWithDerivatives) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const SpectralVectorField u = test::random_field(g, 7, 6);
    const double alpha = 0.2;
    const auto grad_of_filtered = gradient_samples(helmholtz_filter(u, alpha));
    // Filter each derivative component separately.
    for (int j = 0; j < 3; ++j) {
        SpectralVectorField dj(g);
        for_each_mode(g, [&](std::size_t idx, const Mode& m, double) {
            for (int c = 0; c < 3; ++c) dj(c, idx) = Complex(0.0, g.k0() * m[j]) * u(c, idx);
        });
        const PhysicalVectorField p = to_physical(helmholtz_filter(dj, alpha));
        for (int i = 0; i < 3; ++i) {
            const auto& ref = grad_of_filtered[3 * i + j];
            double diff = 0.0;
            double scale = 0.0;
            for (std::size_t x = 0; x < ref.size(); ++x) {
                diff = std::max(diff, std::abs(ref[x] - p.component(i)[x]));
                scale = std::max(scale, std::abs(ref[x]));
            }
            EXPECT_LE(diff, 1e-12 * scale);
        }
    }
}

TEST(ModelKind, ParsesNamesAndValidates) {
    EXPECT_EQ(parse_model_kind("ml-alpha"), ModelKind::MlAlpha);
    EXPECT_EQ(parse_model_kind("leray-alpha"), ModelKind::LerayAlpha);
    EXPECT_EQ(parse_model_kind("nse"), ModelKind::Nse);
    EXPECT_THROW(parse_model_kind("bardina"), ConfigError);
    try {
        ModelParams{-1.0, 0.1, ModelKind::MlAlpha}.validate();
        FAIL() << "negative viscosity accepted";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("model.nu"), std::string::npos);
    }
    EXPECT_THROW((ModelParams{1.0, -0.1, ModelKind::MlAlpha}.validate()), ConfigError);
    EXPECT_EQ((ModelParams{1.0, 0.3, ModelKind::Nse}.filter_alpha()), 0.0);
}

/// a = (0, A cos x, 0) advecting b = (B sin y, 0, 0) on the 2 pi box:
/// P[(a.grad) b] = (A B / 2) (cos x cos y, sin x sin y, 0).
struct TwoModeCase {
    TorusGrid grid = make_grid(8, kTwoPi);
    double A = 0.7;
    double B = -1.3;
    SpectralVectorField a{grid};
    SpectralVectorField b{grid};
    SpectralVectorField expected{grid};

    TwoModeCase() {
        a.set_mode(1, {1, 0, 0}, Complex(A / 2.0, 0.0));
        b.set_mode(0, {0, 1, 0}, Complex(0.0, -B / 2.0));
        const double c = A * B / 2.0;
        // cos x cos y = (e^{i(x+y)} + e^{i(x-y)} + c.c.) / 4
        expected.set_mode(0, {1, 1, 0}, Complex(c / 4.0, 0.0));
        expected.set_mode(0, {1, -1, 0}, Complex(c / 4.0, 0.0));
        // sin x sin y = -(e^{i(x+y)} - e^{i(x-y)} + c.c.) / 4
        expected.set_mode(1, {1, 1, 0}, Complex(-c / 4.0, 0.0));
        expected.set_mode(1, {1, -1, 0}, Complex(c / 4.0, 0.0));
    }
};

TEST(Nonlinear, TwoOrthogonalModesByHand) {
    const TwoModeCase tc;
    const SpectralVectorField got = nonlinear_term(ModelKind::MlAlpha, tc.a, tc.b);
    EXPECT_LE(test::max_rel_difference(got, tc.expected), 1e-15);
    const oracle::DenseField dense =
        oracle::dense_nonlinear(oracle::to_dense(tc.a), oracle::to_dense(tc.b));
    EXPECT_LE(oracle::max_abs_difference(dense, oracle::to_dense(tc.expected)), 1e-15);
}

TEST(Nonlinear, SingleModeAlongOrthogonalDirectionDoesNotSelfAdvect) {
    const TorusGrid g = make_grid(8, kTwoPi);
    SpectralVectorField u(g);
    u.set_mode(0, {0, 0, 2}, Complex(0.0, -0.5));
    for (auto kind : {ModelKind::MlAlpha, ModelKind::LerayAlpha, ModelKind::Nse}) {
        const SpectralVectorField nl = nonlinear_term(kind, u, helmholtz_filter(u, 0.3));
        EXPECT_LE(test::max_abs(nl), 1e-16);
    }
}

TEST(Nonlinear, MatchesDenseOracleForEveryKind) {
    const TorusGrid g = make_grid(8, 1.4);
    const double alpha = 0.11;
    for (auto kind : {ModelKind::MlAlpha, ModelKind::LerayAlpha, ModelKind::Nse}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const SpectralVectorField u = test::random_solenoidal_field(g, seed, 2);
            const double fa = kind == ModelKind::Nse ? 0.0 : alpha;
            const SpectralVectorField ubar = helmholtz_filter(u, fa);
            const oracle::DenseField du = oracle::to_dense(u);
            const oracle::DenseField dub = oracle::to_dense(ubar);
            const oracle::DenseField ref = kind == ModelKind::MlAlpha      ? oracle::dense_nonlinear(du, dub)
                                           : kind == ModelKind::LerayAlpha ? oracle::dense_nonlinear(dub, du)
                                                                           : oracle::dense_nonlinear(du, du);
            const oracle::DenseField got = oracle::to_dense(nonlinear_term(kind, u, ubar));
            EXPECT_LE(oracle::max_abs_difference(got, ref), 1e-12 * oracle::max_abs(ref));
        }
    }
}

TEST(Rhs, ZeroVelocityGivesForcing) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const SpectralVectorField f = test::random_solenoidal_field(g, 30, 4);
    const Tendency t = rhs(SpectralVectorField(g), ModelParams{0.1, 0.2, ModelKind::MlAlpha}, f);
    EXPECT_LE(test::max_rel_difference(t.total(), f), 1e-15);
}

TEST(Rhs, SingleModeMatchesViscousDecayAndOracle) {
    const TorusGrid g = make_grid(8, kTwoPi);
    const ModelParams params{0.3, 0.25, ModelKind::MlAlpha};
    SpectralVectorField u(g);
    u.set_mode(0, {0, 1, 1}, Complex(0.2, 0.1));
    u.set_mode(1, {0, 1, 1}, Complex(-0.1, 0.4));
    u.set_mode(2, {0, 1, 1}, Complex(0.1, -0.4));
    u = project_solenoidal(u);
    const SpectralVectorField f(g);
    const Tendency t = rhs(u, params, f);
    const SpectralVectorField visc = -params.nu * mode_norm2(g, {0, 1, 1}) * u;
    EXPECT_LE(test::max_rel_difference(t.viscous, visc), 1e-15);
    const oracle::DenseField ref = oracle::dense_rhs(oracle::to_dense(u), params, oracle::to_dense(f));
    EXPECT_LE(oracle::max_abs_difference(oracle::to_dense(t.total()), ref), 1e-15);
}

TEST(Rhs, InviscidUnforcedTendencyIsOrthogonalToFilteredVelocity) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const double alpha = 0.2;
    const SpectralVectorField u = test::random_solenoidal_field(g, 41, 5);
    const Tendency t = rhs(u, ModelParams{1e-300, alpha, ModelKind::MlAlpha}, SpectralVectorField(g));
    const SpectralVectorField ubar = helmholtz_filter(u, alpha);
    const double inj = inner_product(t.explicit_part, ubar);
    const double scale = std::sqrt(sobolev_moment(u, 0) * sobolev_moment(ubar, 1) * sobolev_moment(ubar, 0));
    EXPECT_LE(std::abs(inj), 1e-12 * scale);
}

TEST(Rhs, RejectsCompressibleForcing) {
    const TorusGrid g = make_grid(8, kTwoPi);
    const SpectralVectorField f = test::random_field(g, 2, 2);
    EXPECT_THROW(rhs(SpectralVectorField(g), ModelParams{0.1, 0.1, ModelKind::MlAlpha}, f), DomainError);
}

TEST(Nonlinear, AlphaToZeroAtSecondOrder) {
    const TorusGrid g = make_grid(32, kTwoPi);
    const SpectralVectorField u = test::random_solenoidal_field(g, 77, 4);
    const SpectralVectorField nse = nonlinear_term(ModelKind::Nse, u, u);
    std::vector<double> err;
    for (double alpha : {0.1, 0.05, 0.025}) {
        const SpectralVectorField ml = nonlinear_term(ModelKind::MlAlpha, u, helmholtz_filter(u, alpha));
        err.push_back(std::sqrt(sobolev_moment(ml - nse, 0)));
    }
    for (int i = 0; i + 1 < 3; ++i) {
        const double ratio = err[i] / err[i + 1];
        EXPECT_GE(ratio, 3.2);
        EXPECT_LE(ratio, 4.8);
    }
}

} // namespace
} // namespace mlaf
