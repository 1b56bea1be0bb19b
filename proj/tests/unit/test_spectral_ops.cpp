#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "mlaf/error.hpp"
#include "mlaf/initial.hpp"
#include "mlaf/oracle.hpp"
#include "mlaf/spectral_ops.hpp"
#include "mlaf/transform.hpp"
#include "test_fields.hpp"

namespace mlaf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// k.u(k) relative to |k||u(k)| summed over the lattice, evaluated here
/// without the library's helper.
double direct_divergence(const SpectralVectorField& u) {
    const TorusGrid& g = u.grid();
    double num = 0.0;
    double den = 0.0;
    for_each_mode(g, [&](std::size_t idx, const Mode& m, double w) {
        Complex d = 0.0;
        double uu = 0.0;
        for (int c = 0; c < 3; ++c) {
            d += g.k0() * m[c] * u(c, idx);
            uu += std::norm(u(c, idx));
        }
        num += w * std::norm(d);
        den += w * mode_norm2(g, m) * uu;
    });
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

TEST(Projection, SolenoidalFieldUnchanged) {
    const TorusGrid g = make_grid(16, 2.0);
    const SpectralVectorField u = test::random_solenoidal_field(g, 5, 6);
    EXPECT_LE(test::max_rel_difference(project_solenoidal(u), u), 1e-14);
}

TEST(Projection, GradientFieldVanishes) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const SpectralVectorField phi = test::random_field(g, 9, 6);
    SpectralVectorField grad(g);
    for_each_mode(g, [&](std::size_t idx, const Mode& m, double) {
        for (int c = 0; c < 3; ++c) grad(c, idx) = Complex(0.0, g.k0() * m[c]) * phi(0, idx);
    });
    EXPECT_LE(test::max_abs(project_solenoidal(grad)), 1e-13 * test::max_abs(grad));
}

TEST(Projection, OutputIsDivergenceFree) {
    const TorusGrid g = make_grid(16, 1.3);
    const SpectralVectorField p = project_solenoidal(test::random_field(g, 21, 7));
    EXPECT_LE(direct_divergence(p), 1e-13);
    EXPECT_LE(divergence_residual(p), 1e-13);
    EXPECT_EQ(p.mode(0, {0, 0, 0}), Complex(0.0));
}

TEST(Projection, SelfAdjointAndIdempotent) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const SpectralVectorField u = test::random_field(g, 1, 7);
    const SpectralVectorField v = test::random_field(g, 2, 7);
    const SpectralVectorField pu = project_solenoidal(u);
    const SpectralVectorField pv = project_solenoidal(v);
    const double a = inner_product(pu, v);
    const double b = inner_product(u, pv);
    EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(a));
    EXPECT_LE(test::max_rel_difference(project_solenoidal(pu), pu), 1e-14);
}

TEST(Moments, ZeroFieldHasZeroMoments) {
    const TorusGrid g = make_grid(8, 1.0);
    for (double h : sobolev_moments(SpectralVectorField(g), 6)) EXPECT_EQ(h, 0.0);
}

TEST(Moments, ParsevalAgainstPhysicalMean) {
    const TorusGrid g = make_grid(16, 1.7);
    const SpectralVectorField u = test::random_field(g, 4, 7);
    const PhysicalVectorField p = to_physical(u);
    double sum = 0.0;
    for (int c = 0; c < 3; ++c)
        for (double v : p.component(c)) sum += v * v;
    const double quad = sum / static_cast<double>(g.physical_size()) * g.volume();
    const double h0 = sobolev_moment(u, 0);
    EXPECT_LE(std::abs(quad - h0), 1e-12 * h0);
}

/// |grad^N u|^2 integrated by collocation quadrature, with every partial
/// derivative summed as a trigonometric series at each point.
double quadrature_moment(const SpectralVectorField& u, int order) {
    const TorusGrid& g = u.grid();
    const int n = g.n();
    const int band = g.dealias_cut();
    std::vector<Mode> modes;
    for (int a = -band; a <= band; ++a)
        for (int b = -band; b <= band; ++b)
            for (int c = -band; c <= band; ++c) modes.push_back({a, b, c});

    // Every ordered multi-index (j_1..j_N) in {0,1,2}^N.
    int combos = 1;
    for (int i = 0; i < order; ++i) combos *= 3;

    double total = 0.0;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
            for (int iz = 0; iz < n; ++iz) {
                const double x[3] = {ix * g.dx(), iy * g.dx(), iz * g.dx()};
                for (int comb = 0; comb < combos; ++comb) {
                    for (int c = 0; c < 3; ++c) {
                        Complex val = 0.0;
                        for (const Mode& m : modes) {
                            const Complex coeff = u.mode(c, m);
                            if (coeff == Complex(0.0)) continue;
                            Complex factor = 1.0;
                            int rest = comb;
                            for (int i = 0; i < order; ++i, rest /= 3)
                                factor *= Complex(0.0, g.k0() * m[rest % 3]);
                            const double phase = g.k0() * (m[0] * x[0] + m[1] * x[1] + m[2] * x[2]);
                            val += coeff * factor * std::exp(Complex(0.0, phase));
                        }
                        total += std::norm(val);
                    }
                }
            }
    return total / static_cast<double>(g.physical_size()) * g.volume();
}

TEST(Moments, SpectralSumMatchesPhysicalQuadrature) {
    const TorusGrid g = make_grid(8, 2.2);
    const SpectralVectorField u = test::random_field(g, 17, 2);
    for (int order = 0; order <= 2; ++order) {
        const double spectral = sobolev_moment(u, order);
        const double quad = quadrature_moment(u, order);
        EXPECT_LE(std::abs(spectral - quad), 1e-10 * spectral) << "N = " << order;
    }
}

TEST(Moments, LogConvex) {
    const TorusGrid g = make_grid(16, kTwoPi);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto h = sobolev_moments(test::random_field(g, seed, 5), 6);
        for (int k = 1; k < 6; ++k) {
            EXPECT_LE(h[k] * h[k], h[k - 1] * h[k + 1] * (1.0 + 1e-12));
        }
    }
}

TEST(Moments, OrderAboveMaximumRejected) {
    const TorusGrid g = make_grid(8, 1.0);
    EXPECT_THROW(sobolev_moment(SpectralVectorField(g), 7), DomainError);
}

TEST(SupNorms, SineAlongZ) {
    const TorusGrid g = make_grid(16, kTwoPi);
    const double a = -1.7;
    SpectralVectorField u(g);
    // a sin(z) = a / (2i) e^{iz} + c.c.
    u.set_mode(0, {0, 0, 1}, Complex(0.0, -a / 2.0));
    const SupNorms s = sup_norms(u);
    EXPECT_NEAR(s.value, std::abs(a), 1e-14);
    EXPECT_NEAR(s.gradient, std::abs(a) * g.k0(), 1e-14);
}

TEST(SupNorms, ZeroField) {
    const SupNorms s = sup_norms(SpectralVectorField(make_grid(8, 1.0)));
    EXPECT_EQ(s.value, 0.0);
    EXPECT_EQ(s.gradient, 0.0);
}

/// Same coefficients on a grid twice as fine.
SpectralVectorField refine(const SpectralVectorField& u) {
    const TorusGrid& g = u.grid();
    const TorusGrid fine = make_grid(2 * g.n(), g.length());
    SpectralVectorField out(fine);
    const int band = g.dealias_cut();
    for (int a = -band; a <= band; ++a)
        for (int b = -band; b <= band; ++b)
            for (int c = 0; c <= band; ++c)
                for (int k = 0; k < 3; ++k) out.set_mode(k, {a, b, c}, u.mode(k, {a, b, c}));
    return out;
}

TEST(SupNorms, CollocationMaxWithinTwoPercentOfRefinedGrid) {
    const TorusGrid g = make_grid(32, kTwoPi);
    RandomFieldSpec spec;
    spec.kmax = 3;
    spec.seed = 12;
    const SpectralVectorField u = random_solenoidal(g, spec);
    const SupNorms coarse = sup_norms(u);
    const SupNorms fine = sup_norms(refine(u));
    EXPECT_LE(coarse.value, fine.value * (1.0 + 1e-12));
    EXPECT_LE(std::abs(coarse.value - fine.value), 0.02 * fine.value);
    EXPECT_LE(std::abs(coarse.gradient - fine.gradient), 0.02 * fine.gradient);
}

TEST(DealiasedProduct, TwoModesLandOnSumAndDifference) {
    const TorusGrid g = make_grid(8, kTwoPi);
    SpectralVectorField a(g);
    SpectralVectorField b(g);
    const Complex ca(0.3, 0.4);
    const Complex cb(-0.2, 0.9);
    a.set_mode(0, {1, 0, 0}, ca);
    b.set_mode(0, {0, 1, 1}, cb);
    const SpectralVectorField p = dealiased_product(a, b);
    for_each_mode(g, [&](std::size_t idx, const Mode& m, double) {
        Complex expected = 0.0;
        if (m == Mode{1, 1, 1}) expected = ca * cb;
        if (m == Mode{-1, 1, 1}) expected = std::conj(ca) * cb;
        EXPECT_NEAR(std::abs(p(0, idx) - expected), 0.0, 1e-15)
            << m[0] << "," << m[1] << "," << m[2];
        EXPECT_EQ(p(1, idx), Complex(0.0));
    });
}

TEST(DealiasedProduct, SumOutsideMaskVanishes) {
    const TorusGrid g = make_grid(8, kTwoPi);
    SpectralVectorField a(g);
    SpectralVectorField b(g);
    a.set_mode(2, {2, 2, 0}, Complex(1.0, 0.5));
    b.set_mode(2, {2, -2, 0}, Complex(0.25, -1.0));
    EXPECT_LE(test::max_abs(dealiased_product(a, b)), 1e-15);
}

TEST(DealiasedAdvection, MatchesDenseConvolution) {
    const TorusGrid g = make_grid(8, 1.9);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const SpectralVectorField a = test::random_solenoidal_field(g, seed, 3);
        const SpectralVectorField b = test::random_solenoidal_field(g, seed + 100, 3);
        const oracle::DenseField ref = oracle::dense_advection(oracle::to_dense(a), oracle::to_dense(b));
        const oracle::DenseField got = oracle::to_dense(dealiased_advection(a, b));
        EXPECT_LE(oracle::max_abs_difference(got, ref), 1e-12 * oracle::max_abs(ref));
    }
}

TEST(DealiasedAdvection, InputsAreTruncatedToMask) {
    const TorusGrid g = make_grid(8, kTwoPi);
    const SpectralVectorField a = test::random_field(g, 8, 3);
    const SpectralVectorField b = test::random_field(g, 9, 3);
    const SpectralVectorField direct = dealiased_advection(a, b);
    const SpectralVectorField trunc = dealiased_advection(truncate_to_mask(a), truncate_to_mask(b));
    EXPECT_LE(test::max_rel_difference(direct, trunc), 1e-15);
}

} // namespace
} // namespace mlaf
