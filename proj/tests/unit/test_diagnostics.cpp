#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "mlaf/diagnostics.hpp"
#include "mlaf/error.hpp"
#include "mlaf/forcing.hpp"
#include "mlaf/initial.hpp"
#include "mlaf/integrator.hpp"
#include "mlaf/ladder.hpp"
#include "mlaf/model.hpp"
#include "mlaf/spectral_ops.hpp"
#include "test_fields.hpp"

namespace mlaf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double energy(const DiagnosticsRecord& r, double alpha) {
    return 0.5 * (r.Hbar[0] + alpha * alpha * r.Hbar[1]);
}

SimState forced_state(int n, double alpha, std::uint64_t seed) {
    const TorusGrid g = make_grid(n, kTwoPi);
    RandomFieldSpec spec;
    spec.seed = seed;
    spec.kmax = 3;
    return SimState{0.0, random_solenoidal(g, spec), ModelParams{0.05, alpha, ModelKind::MlAlpha},
                    narrowband_force(g, ForcingSpec{2, 1.0, seed}), 0};
}

TEST(Record, ZeroStateGivesZeroRecord) {
    const TorusGrid g = make_grid(8, kTwoPi);
    const SimState s{0.0, SpectralVectorField(g), ModelParams{0.1, 0.1, ModelKind::MlAlpha},
                     SpectralVectorField(g), 0};
    const DiagnosticsRecord r = record(s, 4);
    for (double v : r.H) EXPECT_EQ(v, 0.0);
    for (double v : r.Hbar) EXPECT_EQ(v, 0.0);
    for (double v : r.Phi) EXPECT_EQ(v, 0.0);
    for (double v : r.dHbar_dt) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(r.sup_ubar, 0.0);
    EXPECT_EQ(r.sup_grad_ubar, 0.0);
    EXPECT_EQ(r.inj, 0.0);
    EXPECT_EQ(r.visc, 0.0);
    EXPECT_EQ(r.dE_dt, 0.0);
}

TEST(Record, EnergyBalanceIdentity) {
    const SimState s = forced_state(16, 0.2, 4);
    const DiagnosticsRecord r = record(s, 6);
    const double scale = std::max({std::abs(r.dE_dt), std::abs(r.inj), std::abs(r.visc)});
    EXPECT_LE(std::abs(r.dE_dt + r.visc - r.inj), 1e-10 * scale);
    EXPECT_DOUBLE_EQ(r.visc, s.params.nu * (r.Hbar[1] + 0.04 * r.Hbar[2]));
}

TEST(Record, EnergyRateMatchesCentredDifference) {
    const double alpha = 0.2;
    const SimState s0 = forced_state(16, alpha, 5);
    const double dt0 = kDtSafety * cfl_dt(s0);
    std::vector<double> err;
    for (double dt : {dt0, dt0 / 2.0}) {
        const SimState s1 = step(s0, dt);
        const SimState s2 = step(s1, dt);
        const double fd = (energy(record(s2, 3), alpha) - energy(record(s0, 3), alpha)) / (2.0 * dt);
        err.push_back(std::abs(fd - record(s1, 3).dE_dt));
    }
    EXPECT_GE(err[0] / err[1], 3.0);
    EXPECT_LE(err[0] / err[1], 5.0);
}

TEST(Record, SingleModeClosedForms) {
    const TorusGrid g = make_grid(16, 3.0);
    const double a = 0.9;
    const int m = 2;
    const double alpha = 0.15;
    const SimState s{0.0, single_mode(g, a, m), ModelParams{0.1, alpha, ModelKind::MlAlpha},
                     SpectralVectorField(g), 0};
    const DiagnosticsRecord r = record(s, 6);
    const double k = g.k0() * m;
    const double filt = 1.0 / (1.0 + alpha * alpha * k * k);
    for (int n = 0; n <= 6; ++n) {
        const double h = g.volume() * a * a / 2.0 * std::pow(k, 2.0 * n);
        EXPECT_LE(std::abs(r.H[n] - h), 1e-12 * h);
        EXPECT_LE(std::abs(r.Hbar[n] - h * filt * filt), 1e-12 * h * filt * filt);
    }
    EXPECT_NEAR(r.sup_ubar, a * filt, 1e-14);
    EXPECT_NEAR(r.sup_grad_ubar, a * k * filt, 1e-13);
    for (int n = 1; n <= 4; ++n) {
        for (int rr = 0; rr < n; ++rr) {
            const double kap = kappa(j_moment(r, n, 0.0, alpha), j_moment(r, rr, 0.0, alpha), n, rr);
            EXPECT_LE(std::abs(kap - k), 1e-12 * k);
        }
    }
    for (int n = 0; n <= 4; ++n) {
        EXPECT_LE(std::abs(j_moment(r, n, 0.0, alpha) - (r.Hbar[n] + 2 * alpha * alpha * r.Hbar[n + 1])),
                  1e-15 * r.Hbar[n]);
    }
}

TEST(Tau, Formula) {
    EXPECT_NEAR(tau(std::exp(1.0), 1.0, 1.0), std::exp(-0.5), 1e-15);
    EXPECT_THROW(tau(1.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(tau(0.5, 1.0, 1.0), DomainError);
    EXPECT_NEAR(tau(7.0, 0.6, 0.3), 4.0 * tau(7.0, 0.3, 0.3), 1e-15);
}

TEST(Moments, JFormNavierStokesLimit) {
    const SimState s = forced_state(16, 0.0, 7);
    const DiagnosticsRecord r = record(s, 6);
    for (int n = 0; n < 6; ++n) {
        EXPECT_EQ(j_moment(r, n, 0.0, 0.0), r.Hbar[n]);
        EXPECT_EQ(r.Hbar[n], r.H[n]);
    }
}

TEST(Moments, JFormRecomputedFromRawMoments) {
    const SimState s = forced_state(16, 0.3, 8);
    const DiagnosticsRecord r = record(s, 6);
    const double t = 0.37;
    const double a2 = 0.09;
    for (int n = 0; n < 6; ++n) {
        const double fn = r.Hbar[n] + t * r.Phi[n];
        const double fn1 = r.Hbar[n + 1] + t * r.Phi[n + 1];
        EXPECT_DOUBLE_EQ(f_moment(r, n, t), fn);
        const double jn = fn + 2.0 * a2 * fn1;
        EXPECT_LE(std::abs(j_moment(r, n, t, 0.3) - jn), 1e-14 * jn);
    }
}

TEST(Kappa, GeometricMoments) {
    const double c = 3.7;
    const double a = 5.3;
    for (int n = 1; n <= 5; ++n) {
        for (int r = 0; r < n; ++r) {
            const double k = kappa(c * std::pow(a, n), c * std::pow(a, r), n, r);
            EXPECT_NEAR(k, std::sqrt(a), 1e-13);
        }
    }
}

TEST(TimeAverage, ConstantSeries) {
    const std::vector<double> t{0.0, 0.3, 0.5, 1.4};
    const std::vector<double> v(4, 2.75);
    EXPECT_DOUBLE_EQ(time_average(t, v, 0.0), 2.75);
}

TEST(TimeAverage, LinearSeriesGivesMidpoint) {
    std::vector<double> t;
    std::vector<double> v;
    for (int i = 0; i <= 10; ++i) {
        t.push_back(0.2 * i);
        v.push_back(3.0 - 1.5 * t.back());
    }
    EXPECT_NEAR(time_average(t, v, 0.0), 3.0 - 1.5, 1e-14);
    EXPECT_NEAR(time_average(t, v, 1.0), 3.0 - 1.5 * 1.5, 1e-14);
}

TEST(TimeAverage, AccumulatorIsLinearAndRejectsEmptyWindow) {
    AverageAccumulator acc(1.0, 2);
    EXPECT_THROW(acc.mean(), DomainError);
    acc.add(0.5, std::vector<double>{100.0, 0.0});
    EXPECT_EQ(acc.samples(), 0u);
    for (int i = 0; i <= 4; ++i) {
        const double t = 1.0 + 0.25 * i;
        acc.add(t, std::vector<double>{t * t, 2.0 * t * t + 1.0});
    }
    const auto m = acc.mean();
    EXPECT_NEAR(m[1], 2.0 * m[0] + 1.0, 1e-14);
}

TEST(Reynolds, Definitions) {
    const double L = 2.5;
    const ReynoldsResult r = reynolds(L * L * L, 0.4, 0.02, L);
    EXPECT_DOUBLE_EQ(r.U, 1.0);
    EXPECT_DOUBLE_EQ(r.Re, 0.4 / 0.02);
    const ReynoldsResult r4 = reynolds(4.0 * L * L * L, 0.4, 0.02, L);
    EXPECT_DOUBLE_EQ(r4.Re, 2.0 * r.Re);
}

TEST(Reynolds, SteadyLinearSingleModeSolution) {
    // f = (F sin(k z), 0, 0) does not self-advect, so u = f / (nu k^2) is an
    // exact steady state with U = F / (sqrt(2) nu k^2).
    const TorusGrid g = make_grid(16, kTwoPi);
    const double F = 0.3;
    const double nu = 0.2;
    const int m = 2;
    const double k = g.k0() * m;
    const SpectralVectorField f = single_mode(g, F, m);
    SimState s{0.0, single_mode(g, F / (nu * k * k), m), ModelParams{nu, 0.1, ModelKind::MlAlpha}, f, 0};
    std::vector<double> t;
    std::vector<double> h0;
    for (int i = 0; i < 20; ++i) {
        const DiagnosticsRecord r = record(s, 3);
        t.push_back(r.t);
        h0.push_back(r.H[0]);
        s = step(s, 0.01);
    }
    const double ell = 1.0 / k;
    const ReynoldsResult rr = reynolds(time_average(t, h0, 0.0), ell, nu, g.length());
    const double U = F / (std::sqrt(2.0) * nu * k * k);
    EXPECT_LE(std::abs(rr.U - U), 1e-12 * U);
    EXPECT_LE(std::abs(rr.Re - U * ell / nu), 1e-12 * U * ell / nu);
}

std::vector<DiagnosticsRecord> short_forced_series(int steps) {
    SimState s = forced_state(16, 0.2, 11);
    const double dt = kDtSafety * cfl_dt(s);
    std::vector<DiagnosticsRecord> out;
    for (int i = 0; i <= steps; ++i) {
        if (i % 2 == 0) out.push_back(record(s, 6));
        if (i < steps) s = step(s, dt);
    }
    return out;
}

TEST(Ladder, ZerothRungHoldsWithZeroConstant) {
    const auto series = short_forced_series(60);
    LadderInputs li;
    li.nu = 0.05;
    li.alpha = 0.2;
    li.ell = 0.5;
    li.c_ref = 0.0;
    const LadderReport rep = ladder_check(series, 0, li);
    EXPECT_EQ(rep.samples, series.size());
    EXPECT_EQ(rep.pass_fraction, 1.0);
    EXPECT_EQ(rep.fitted_c, 0.0);
}

TEST(Ladder, ExactRatesAgreeWithFiniteDifferences) {
    const auto series = short_forced_series(200);
    LadderInputs li;
    li.nu = 0.05;
    li.alpha = 0.2;
    li.ell = 0.5;
    li.c_ref = reference_constant(1, 5.0);
    const LadderReport rep = ladder_check(series, 1, li);
    EXPECT_LT(rep.fd_max_rel_error, 1e-2);
    EXPECT_TRUE(std::isfinite(rep.fitted_c));
}

TEST(Ladder, Preconditions) {
    const auto series = short_forced_series(4);
    LadderInputs li;
    li.nu = 0.05;
    EXPECT_THROW(ladder_check(std::span(series).first(2), 0, li), DomainError);
    EXPECT_THROW(ladder_check(series, 5, li), DomainError);
    EXPECT_EQ(reference_constant(0, 5.0), 0.0);
    EXPECT_EQ(reference_constant(3, 5.0), 40.0);
}

TEST(Spectrum, ShellsSumToHalfTheMoments) {
    const SimState s = forced_state(16, 0.3, 4);
    const DiagnosticsRecord r = record(s, 2);
    const EnergySpectrum e = energy_spectrum(s.u, 0.3);
    double su = 0.0;
    double sb = 0.0;
    for (std::size_t k = 0; k < e.u.size(); ++k) {
        su += e.u[k];
        sb += e.ubar[k];
        EXPECT_LE(e.ubar[k], e.u[k]);
    }
    EXPECT_NEAR(su, 0.5 * r.H[0], 1e-12 * r.H[0]);
    EXPECT_NEAR(sb, 0.5 * r.Hbar[0], 1e-12 * r.Hbar[0]);
    EXPECT_EQ(e.u[0], 0.0);
}

TEST(Spectrum, SingleModeFillsOneShell) {
    const TorusGrid g = make_grid(16, 2.0);
    const SpectralVectorField u = single_mode(g, 1.0, 2);
    const double alpha = 0.1;
    const EnergySpectrum e = energy_spectrum(u, alpha);
    const double h0 = sobolev_moments(u, 0)[0];
    const double g2 = 1.0 + alpha * alpha * 4.0 * g.k0() * g.k0();
    EXPECT_DOUBLE_EQ(e.k0, g.k0());
    for (std::size_t k = 0; k < e.u.size(); ++k) {
        EXPECT_EQ(e.u[k] > 0.0, k == 2) << k;
    }
    EXPECT_NEAR(e.u[2], 0.5 * h0, 1e-14 * h0);
    EXPECT_NEAR(e.ubar[2], 0.5 * h0 / (g2 * g2), 1e-14 * h0);
}

} // namespace
} // namespace mlaf
