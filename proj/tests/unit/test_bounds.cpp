#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "mlaf/bounds.hpp"
#include "mlaf/error.hpp"
#include "mlaf/forcing.hpp"
#include "mlaf/initial.hpp"
#include "mlaf/integrator.hpp"
#include "test_fields.hpp"

namespace mlaf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Exponent ml(std::string_view q) {
    const auto e = table_exponent(q, ModelColumn::MlAlpha);
    if (!e) throw std::runtime_error("missing row");
    return *e;
}

TEST(ExponentTable, MlAlphaColumn) {
    EXPECT_EQ(ml("ell_lambda_k_inv").re, (Rational{5, 8}));
    EXPECT_EQ(ml("Hbar1").re, (Rational{5, 2}));
    EXPECT_EQ(ml("Hbar2").re, (Rational{3, 1}));
    EXPECT_EQ(ml("Hbar3").re, (Rational{7, 1}));
    EXPECT_EQ(ml("d_F").re, (Rational{9, 4}));

    const Exponent k = ml("ell2_kappa_N0");
    EXPECT_EQ(k.re, (Rational{5, 2}));
    EXPECT_EQ(k.re_per_inv_n, (Rational{-3, 2}));
    EXPECT_EQ(k.log_re, (Rational{0, 1}));
    EXPECT_EQ(k.log_per_inv_n, (Rational{1, 1}));
    EXPECT_DOUBLE_EQ(k.re_power(3), 2.0);
    EXPECT_DOUBLE_EQ(k.log_power(4), 0.25);

    const Exponent k10 = ml("ell2_kappa_10");
    EXPECT_EQ(k10.re, (Rational{1, 1}));
    EXPECT_EQ(k10.log_re, (Rational{1, 1}));
    EXPECT_EQ(k10.re_per_inv_n, (Rational{0, 1}));
}

TEST(ExponentTable, LookupErrors) {
    EXPECT_THROW(table_exponent("no_such_row", ModelColumn::MlAlpha), DomainError);
    for (const auto& row : exponent_table()) {
        EXPECT_TRUE(row.columns[static_cast<int>(ModelColumn::MlAlpha)].has_value()) << row.quantity;
    }
}

TEST(Rational, ReducesAndPrints) {
    EXPECT_EQ((Rational{6, -8}.reduced().num), -3);
    EXPECT_EQ((Rational{6, -8}.reduced().den), 4);
    EXPECT_EQ((Rational{10, 4}.str()), "5/2");
    EXPECT_EQ((Rational{3, 1}.str()), "3");
    EXPECT_EQ((Rational{1, 2}), (Rational{2, 4}));
}

/// Samples of a forced ML-alpha run on 16^3.
struct ForcedSeries {
    double nu = 0.05;
    double alpha = 0.2;
    double ell = 0.0;
    double f_rms = 1.0;
    double length = kTwoPi;
    std::vector<DiagnosticsRecord> series;

    ForcedSeries() {
        const TorusGrid g = make_grid(16, length);
        RandomFieldSpec spec;
        spec.seed = 2;
        spec.kmax = 3;
        SimState s{0.0, random_solenoidal(g, spec), ModelParams{nu, alpha, ModelKind::MlAlpha},
                   narrowband_force(g, ForcingSpec{2, f_rms, 3}), 0};
        ell = forcing_length(g, 2);
        const double dt = kDtSafety * cfl_dt(s);
        for (int i = 0; i <= 200; ++i) {
            if (i % 4 == 0) series.push_back(record(s, 6));
            s = step(s, dt);
        }
    }

    BoundInputs inputs(double spinup = 0.0) const {
        BoundInputs bi;
        bi.series = series;
        bi.spinup = spinup;
        bi.length = length;
        bi.nu = nu;
        bi.alpha = alpha;
        bi.ell = ell;
        bi.f_rms = f_rms;
        return bi;
    }
};

const ForcedSeries& forced() {
    static const ForcedSeries fs;
    return fs;
}

TEST(BoundSuite, ExactInequalitiesHold) {
    const BoundReport b = bound_suite(forced().inputs());
    EXPECT_TRUE(b.h1_interpolation_ok);
    EXPECT_LE(b.h1_lhs, b.h1_rhs);
    EXPECT_TRUE(b.kappa_chain_ok);
    EXPECT_TRUE(b.kappa_floor_ok);
    EXPECT_TRUE(b.log_convexity_ok);
    EXPECT_LE(b.kappa_chain_identity_max_rel, 1e-12);
    EXPECT_LE(b.energy_residual_max_rel, 1e-10);
}

TEST(BoundSuite, ScalesFollowDefinitions) {
    const ForcedSeries& fs = forced();
    const BoundReport b = bound_suite(fs.inputs());
    const double vol = std::pow(fs.length, 3);
    std::vector<double> t;
    std::vector<double> h0;
    std::vector<double> h1;
    for (const auto& r : fs.series) {
        t.push_back(r.t);
        h0.push_back(r.H[0]);
        h1.push_back(r.H[1]);
    }
    const double U = std::sqrt(time_average(t, h0, 0.0) / vol);
    const double eps = fs.nu * time_average(t, h1, 0.0) / vol;
    EXPECT_LE(std::abs(b.U - U), 1e-13 * U);
    EXPECT_LE(std::abs(b.re - U * fs.ell / fs.nu), 1e-13 * b.re);
    EXPECT_LE(std::abs(b.eps - eps), 1e-13 * eps);
    EXPECT_DOUBLE_EQ(b.lambda_k_inv, std::pow(b.eps / std::pow(fs.nu, 3), 0.25));
    EXPECT_DOUBLE_EQ(b.ell_lambda_k_inv, fs.ell * b.lambda_k_inv);
    EXPECT_DOUBLE_EQ(b.gr, grashof(fs.f_rms, fs.ell, fs.nu));
    EXPECT_DOUBLE_EQ(b.grashof_ratio, b.gr / (b.re * b.re + b.re));
    EXPECT_DOUBLE_EQ(b.k_f, 1.0 / fs.ell);
    ASSERT_TRUE(b.tau.has_value());
    EXPECT_DOUBLE_EQ(*b.tau, tau(b.gr, fs.ell, fs.nu));
    ASSERT_TRUE(b.v_alpha.has_value());
    EXPECT_DOUBLE_EQ(*b.v_alpha, std::pow(fs.length / std::sqrt(fs.ell * fs.alpha), 3));
}

TEST(BoundSuite, KappaEntriesAndTableRowsPresent) {
    const BoundReport b = bound_suite(forced().inputs());
    int n0 = 0;
    for (const auto& k : b.kappa) {
        EXPECT_GE(k.min_over_k0, 1.0 - 1e-12);
        EXPECT_GT(k.mean_square, 0.0);
        if (k.r == 0) ++n0;
    }
    EXPECT_EQ(n0, 4);
    std::vector<std::string> want{"ell_lambda_k_inv", "Hbar1", "Hbar2", "Hbar3",
                                  "ell2_kappa_N0", "ell2_kappa_10"};
    ASSERT_TRUE(b.d_f_bound.has_value());
    EXPECT_GT(*b.d_f_bound, 0.0);
    for (const auto& q : want) {
        bool found = false;
        for (const auto& r : b.table_ratios) found = found || r.quantity == q;
        EXPECT_TRUE(found) << q;
    }
    for (const auto& r : b.table_ratios) {
        EXPECT_TRUE(std::isfinite(r.ratio)) << r.quantity;
        EXPECT_DOUBLE_EQ(r.ratio, r.lhs / r.rhs);
    }
}

TEST(BoundSuite, SingleModeKappaEqualsFundamental) {
    const TorusGrid g = make_grid(16, 2.0);
    const SimState s{0.0, single_mode(g, 1.0, 1), ModelParams{0.1, 0.1, ModelKind::MlAlpha},
                     SpectralVectorField(g), 0};
    std::vector<DiagnosticsRecord> series;
    SimState cur = s;
    for (int i = 0; i < 5; ++i) {
        series.push_back(record(cur, 6));
        cur = step(cur, 0.01);
    }
    BoundInputs bi;
    bi.series = series;
    bi.length = 2.0;
    bi.nu = 0.1;
    bi.alpha = 0.1;
    bi.ell = forcing_length(g, 2);
    bi.f_rms = 0.0;
    const BoundReport b = bound_suite(bi);
    for (const auto& k : b.kappa) {
        EXPECT_NEAR(k.min_over_k0, 1.0, 1e-12);
        EXPECT_NEAR(std::sqrt(k.mean_square), g.k0(), 1e-12 * g.k0());
        EXPECT_NEAR(k.ratio_of_averages, g.k0(), 1e-12 * g.k0());
    }
    ASSERT_TRUE(b.tau.has_value());
    EXPECT_EQ(*b.tau, 0.0);
    EXPECT_FALSE(b.notices.empty());
}

TEST(BoundSuite, SpinupBeyondSeriesRejected) {
    EXPECT_THROW(bound_suite(forced().inputs(1e9)), DomainError);
}

} // namespace
} // namespace mlaf
