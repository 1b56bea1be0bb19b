#include "mlaf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mlaf/bounds.hpp"
#include "mlaf/checkpoint.hpp"
#include "mlaf/diagnostics.hpp"
#include "mlaf/error.hpp"
#include "mlaf/forcing.hpp"
#include "mlaf/initial.hpp"
#include "mlaf/integrator.hpp"
#include "mlaf/ladder.hpp"
#include "mlaf/model.hpp"
#include "mlaf/oracle.hpp"
#include "mlaf/rng.hpp"
#include "mlaf/spectral_ops.hpp"
#include "mlaf/transform.hpp"

namespace mlaf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CheckResult leq(std::string name, double value, double bound, std::string detail = {}) {
    return CheckResult{std::move(name), value <= bound, value, "<= " + fmt(bound),
                       std::move(detail)};
}

CheckResult within(std::string name, double value, double lo, double hi, std::string detail = {}) {
    return CheckResult{std::move(name), value >= lo && value <= hi, value,
                       "in [" + fmt(lo) + ", " + fmt(hi) + "]", std::move(detail)};
}

double max_abs(const SpectralVectorField& a) {
    double m = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (const Complex& v : a.component(c)) {
            m = std::max(m, std::abs(v));
        }
    }
    return m;
}

double max_rel_diff(const SpectralVectorField& a, const SpectralVectorField& ref) {
    const double scale = max_abs(ref);
    return max_abs(a - ref) / (scale > 0.0 ? scale : 1.0);
}

double l2(const SpectralVectorField& a) { return std::sqrt(sobolev_moment(a, 0)); }

SpectralVectorField random_field(const TorusGrid& grid, std::uint64_t seed, int kmax = -1) {
    RandomFieldSpec spec;
    spec.kmax = kmax > 0 ? kmax : grid.dealias_cut();
    spec.kpeak = 2.0;
    spec.seed = seed;
    return random_solenoidal(grid, spec);
}

/// Random field without the solenoidal projection or mask; Nyquist planes
/// stay empty.
SpectralVectorField raw_random(const TorusGrid& grid, std::uint64_t seed) {
    SpectralVectorField u(grid);
    StreamRng rng(seed, 5);
    const int nyq = -grid.n() / 2;
    for_each_mode(grid, [&](std::size_t, const Mode& m, double) {
        if (m[0] == nyq || m[1] == nyq || m[2] == nyq) {
            return;
        }
        if (m[2] < 0 || (m[2] == 0 && (m[1] < 0 || (m[1] == 0 && m[0] <= 0)))) {
            return;
        }
        for (int c = 0; c < 3; ++c) {
            u.set_mode(c, m, Complex(rng.normal(), rng.normal()));
        }
    });
    return u;
}

SimState make_state(SpectralVectorField u, ModelParams p) {
    SpectralVectorField f(u.grid());
    return SimState{0.0, std::move(u), p, std::move(f), 0};
}

SpectralVectorField integrate(SimState s, double dt, int steps, bool check_cfl = true) {
    StepOptions so;
    so.check_cfl = check_cfl;
    for (int i = 0; i < steps; ++i) {
        s = step(s, dt, so);
    }
    return s.u;
}

} // namespace

namespace verify {

CheckResult oracle_equivalence(int fields, int n) {
    const TorusGrid grid = make_grid(n, kTwoPi);
    const ModelParams p{0.1, 0.3, ModelKind::MlAlpha};
    double worst = 0.0;
    for (int i = 0; i < fields; ++i) {
        const SpectralVectorField u = random_field(grid, 100 + i);
        const SpectralVectorField ubar = helmholtz_filter(u, p.alpha);
        const SpectralVectorField fast = nonlinear_term(p.kind, u, ubar);
        const oracle::DenseField ref =
            oracle::dense_nonlinear(oracle::to_dense(u), oracle::to_dense(ubar));
        const oracle::DenseField got = oracle::to_dense(fast);
        const double scale = oracle::max_abs(ref);
        worst = std::max(worst, oracle::max_abs_difference(got, ref) / scale);
    }
    return leq("oracle_equivalence", worst, 1e-12,
               std::to_string(fields) + " random " + std::to_string(n) + "^3 fields");
}

CheckResult oracle_sweep_small() {
    double worst = 0.0;
    for (int n : {4, 6, 8}) {
        const TorusGrid grid = detail::make_small_grid(n, 1.7);
        for (ModelKind kind : {ModelKind::MlAlpha, ModelKind::LerayAlpha, ModelKind::Nse}) {
            const ModelParams p{0.2, 0.25, kind};
            const SpectralVectorField u = random_field(grid, 7 + n);
            const SpectralVectorField ubar = helmholtz_filter(u, p.filter_alpha());
            const oracle::DenseField du = oracle::to_dense(u);
            const oracle::DenseField dbar = oracle::dense_filter(du, p.filter_alpha());
            worst = std::max(worst, oracle::max_abs_difference(oracle::to_dense(ubar), dbar) /
                                        oracle::max_abs(dbar));
            const oracle::DenseField ref = [&] {
                switch (kind) {
                case ModelKind::LerayAlpha: return oracle::dense_nonlinear(dbar, du);
                case ModelKind::Nse: return oracle::dense_nonlinear(du, du);
                default: return oracle::dense_nonlinear(du, dbar);
                }
            }();
            const oracle::DenseField got = oracle::to_dense(nonlinear_term(kind, u, ubar));
            worst = std::max(worst,
                             oracle::max_abs_difference(got, ref) / oracle::max_abs(ref));

            const SpectralVectorField f = raw_random(grid, 3 + n);
            const oracle::DenseField pf = oracle::dense_project(oracle::to_dense(f));
            worst = std::max(worst, oracle::max_abs_difference(
                                        oracle::to_dense(project_solenoidal(f)), pf) /
                                        oracle::max_abs(pf));

            const auto hm = sobolev_moments(u, 4);
            const auto dm = oracle::dense_moments(du, 4);
            for (std::size_t k = 0; k < hm.size(); ++k) {
                worst = std::max(worst, std::abs(hm[k] - dm[k]) / dm[k]);
            }
        }
    }
    return leq("oracle_sweep_n4_6_8", worst, 1e-12,
               "nonlinear (3 kinds), filter, projection, moments");
}

CheckResult skew_symmetry() {
    double worst = 0.0;
    for (int n : {16, 24}) {
        const TorusGrid grid = make_grid(n, kTwoPi);
        for (ModelKind kind : {ModelKind::MlAlpha, ModelKind::Nse}) {
            const SpectralVectorField u = random_field(grid, 40 + n);
            const double alpha = kind == ModelKind::Nse ? 0.0 : 0.2;
            const SpectralVectorField ubar = helmholtz_filter(u, alpha);
            const SpectralVectorField nl = nonlinear_term(kind, u, ubar);
            const double scale = std::sqrt(sobolev_moment(u, 0) * sobolev_moment(ubar, 1) *
                                           sobolev_moment(ubar, 0));
            worst = std::max(worst, std::abs(inner_product(nl, ubar)) / scale);
        }
    }
    return leq("skew_symmetry", worst, 1e-11, "|<N(u, ubar), ubar>| / (|u| |grad ubar| |ubar|)");
}

CheckResult projection_properties() {
    const TorusGrid grid = make_grid(16, 3.0);
    const SpectralVectorField u = raw_random(grid, 11);
    const SpectralVectorField v = raw_random(grid, 12);
    const SpectralVectorField pu = project_solenoidal(u);
    const SpectralVectorField ppu = project_solenoidal(pu);
    double worst = max_rel_diff(ppu, pu) / 1e-2; // idempotency budget 1e-14
    const double lhs = inner_product(pu, v);
    const double rhs = inner_product(u, project_solenoidal(v));
    const double sa = std::abs(lhs - rhs) / (l2(u) * l2(v));
    worst = std::max(worst, sa);
    worst = std::max(worst, divergence_residual(pu) * 10.0); // budget 1e-13

    // Gradient fields lie in the kernel.
    SpectralVectorField g(grid);
    const SpectralVectorField phi = raw_random(grid, 13);
    for_each_mode(grid, [&](std::size_t idx, const Mode& m, double) {
        for (int c = 0; c < 3; ++c) {
            g(c, idx) = Complex(0.0, grid.k0() * m[c]) * phi(0, idx);
        }
    });
    worst = std::max(worst, max_abs(project_solenoidal(g)) / max_abs(g) / 1e-2);
    return leq("projection", worst, 1e-12,
               "idempotency, self-adjointness, divergence, gradient kernel (scaled budgets)");
}

CheckResult parseval() {
    double worst = 0.0;
    for (int n : {8, 16}) {
        const TorusGrid grid = make_grid(n, 2.5);
        const SpectralVectorField u = random_field(grid, 21 + n);
        const PhysicalVectorField p = to_physical(u);
        double acc = 0.0;
        for (int c = 0; c < 3; ++c) {
            for (double x : p.component(c)) {
                acc += x * x;
            }
        }
        const double physical = acc / static_cast<double>(grid.physical_size()) * grid.volume();
        const double h0 = sobolev_moment(u, 0);
        worst = std::max(worst, std::abs(physical - h0) / h0);
    }
    return leq("parseval", worst, 1e-12);
}

CheckResult moment_log_convexity() {
    double worst = 0.0;
    const TorusGrid grid = make_grid(16, kTwoPi);
    for (int s = 0; s < 5; ++s) {
        const SpectralVectorField u = random_field(grid, 60 + s);
        for (double alpha : {0.0, 0.3}) {
            const auto h = filtered_moments(u, alpha, kDefaultMaxMoment);
            for (int n = 1; n < kDefaultMaxMoment; ++n) {
                const double excess = (h[n] * h[n] - h[n - 1] * h[n + 1]) / (h[n] * h[n]);
                worst = std::max(worst, excess);
            }
        }
    }
    return leq("moment_log_convexity", worst, 1e-12, "max (H_N^2 - H_{N-1} H_{N+1}) / H_N^2");
}

CheckResult forcing_shell() {
    const TorusGrid grid = make_grid(32, kTwoPi);
    double worst = 0.0;
    for (int s : {2, 3, 5}) {
        const ForcingSpec spec{s, 0.7, 99};
        const SpectralVectorField f = narrowband_force(grid, spec);
        const double ell = forcing_length(grid, s);
        const auto phi = sobolev_moments(f, kDefaultMaxMoment);
        for (int n = 0; n <= kDefaultMaxMoment; ++n) {
            const double expected = std::pow(ell, -2.0 * n) * phi[0];
            worst = std::max(worst, std::abs(phi[n] - expected) / expected);
        }
        worst = std::max(worst, divergence_residual(f) * 10.0);
        worst = std::max(worst, std::abs(rms_amplitude(f) - 0.7) / 0.7);
        const SpectralVectorField again = narrowband_force(grid, spec);
        if (max_abs(f - again) != 0.0) {
            worst = 1.0;
        }
    }
    return leq("forcing_shell", worst, 1e-12,
               "Phi_N = l^-2N Phi_0 (N <= 6), divergence, f_rms, determinism");
}

CheckResult filter_properties() {
    const double L = kTwoPi;
    const TorusGrid grid = make_grid(16, L);
    const SpectralVectorField u = random_field(grid, 5);
    double worst = 0.0;
    for (double alpha : {0.05, 0.3, 1.0}) {
        const SpectralVectorField ubar = helmholtz_filter(u, alpha);
        const auto direct = sobolev_moments(ubar, kDefaultMaxMoment);
        const auto routed = filtered_moments(u, alpha, kDefaultMaxMoment);
        for (std::size_t k = 0; k < direct.size(); ++k) {
            worst = std::max(worst, std::abs(direct[k] - routed[k]) / direct[k]);
        }
        worst = std::max(worst, max_rel_diff(unfilter(ubar, alpha), u) / 10.0);
        // alpha^2 |ubar|_{H2} <= |u| <= (L^2 / 4 pi^2 + alpha^2) |ubar|_{H2}
        const double h2 = std::sqrt(direct[2]);
        const double norm_u = l2(u);
        if (!(alpha * alpha * h2 <= norm_u) ||
            !(norm_u <= (L * L / (4.0 * std::numbers::pi * std::numbers::pi) + alpha * alpha) * h2)) {
            worst = 1.0;
        }
    }
    return leq("filter", worst, 1e-12, "moment routes, unfilter round trip, Poincare sandwich");
}

CheckResult single_mode_closed_forms() {
    const double L = 3.0;
    const TorusGrid grid = make_grid(16, L);
    const double k0 = grid.k0();
    const double A = 1.3;
    const double alpha = 0.4;
    const SpectralVectorField u = single_mode(grid, A, 1);
    double worst = 0.0;
    const auto h = sobolev_moments(u, kDefaultMaxMoment);
    const auto hb = filtered_moments(u, alpha, kDefaultMaxMoment);
    const double g = 1.0 + alpha * alpha * k0 * k0;
    for (int n = 0; n <= kDefaultMaxMoment; ++n) {
        const double expected = A * A * std::pow(k0, 2.0 * n) * grid.volume() / 2.0;
        worst = std::max(worst, std::abs(h[n] - expected) / expected);
        worst = std::max(worst, std::abs(hb[n] - expected / (g * g)) / (expected / (g * g)));
    }
    const SupNorms sup = sup_norms(u);
    worst = std::max(worst, std::abs(sup.value - A) / A);
    worst = std::max(worst, std::abs(sup.gradient - A * k0) / (A * k0));

    const SimState state = make_state(u, ModelParams{0.1, alpha, ModelKind::MlAlpha});
    const DiagnosticsRecord rec = record(state, kDefaultMaxMoment);
    for (int n = 1; n <= 4; ++n) {
        for (int r = 0; r < n; ++r) {
            const double kap = kappa(j_moment(rec, n, 0.0, alpha), j_moment(rec, r, 0.0, alpha), n, r);
            worst = std::max(worst, std::abs(kap - k0) / k0);
        }
    }
    const SpectralVectorField halved = helmholtz_filter(u, 1.0 / k0);
    worst = std::max(worst, max_rel_diff(2.0 * halved, u));
    return leq("single_mode_closed_forms", worst, 1e-12, "H_N, Hbar_N, sup norms, kappa = k0, filter");
}

CheckResult linear_decay_exact() {
    const TorusGrid grid = make_grid(16, kTwoPi);
    const ModelParams p{0.07, 0.2, ModelKind::MlAlpha};
    const SpectralVectorField u = single_mode(grid, 1.0, 3);
    const double dt = 0.01;
    StepOptions so;
    so.linear_only = true;
    const SimState next = step(make_state(u, p), dt, so);
    const double k2 = 9.0 * grid.k0() * grid.k0();
    const SpectralVectorField expected = std::exp(-p.nu * k2 * dt) * u;
    return leq("integrator_linear_exact", max_rel_diff(next.u, expected), 1e-14,
               "single mode, nonlinear term disabled");
}

OrderStudy integrator_order_study(int n) {
    const TorusGrid grid = make_grid(n, kTwoPi);
    const ModelParams p{0.05, 0.2, ModelKind::MlAlpha};
    const SimState s0 = make_state(taylor_green(grid, 1.0), p);
    const double t_end = 1.0;
    const int base = 10;
    const SpectralVectorField ref = integrate(s0, t_end / (base * 32), base * 32);
    OrderStudy out;
    for (int level = 0; level < 3; ++level) {
        const int steps = base << level;
        const SpectralVectorField u = integrate(s0, t_end / steps, steps);
        out.errors.push_back(l2(u - ref) / l2(ref));
    }
    for (std::size_t i = 1; i < out.errors.size(); ++i) {
        out.ratios.push_back(out.errors[i - 1] / out.errors[i]);
    }
    return out;
}

CheckResult integrator_order(int n) {
    const OrderStudy s = integrator_order_study(n);
    const double lo = *std::min_element(s.ratios.begin(), s.ratios.end());
    const double hi = *std::max_element(s.ratios.begin(), s.ratios.end());
    CheckResult r = within("integrator_order", lo, 6.5, 9.5,
                           "ratios " + fmt(s.ratios[0]) + ", " + fmt(s.ratios[1]));
    r.passed = r.passed && hi <= 9.5;
    return r;
}

CheckResult oracle_trajectory() {
    const TorusGrid grid = make_grid(8, kTwoPi);
    const ModelParams p{0.1, 0.3, ModelKind::MlAlpha};
    const SpectralVectorField u0 = random_field(grid, 77);
    const double dt = 1e-3;
    const int steps = 50;
    const SpectralVectorField fast = integrate(make_state(u0, p), dt, steps);
    const oracle::DenseField zero(8, kTwoPi);
    const oracle::DenseField slow =
        oracle::reference_integrate(oracle::to_dense(u0), p, zero, dt, steps);
    const oracle::DenseField got = oracle::to_dense(fast);
    return leq("oracle_trajectory", oracle::max_abs_difference(got, slow) / oracle::max_abs(slow),
               1e-8, "8^3 ML-alpha, IF-RK3 vs dense RK4, t = 0.05");
}

CheckResult energy_identity_short() {
    const TorusGrid grid = make_grid(32, kTwoPi);
    const ModelParams p{0.05, 0.2, ModelKind::MlAlpha};
    SimState s{0.0, random_field(grid, 3, 4), p, narrowband_force(grid, ForcingSpec{3, 1.0, 1}),
               0};
    const double dt = kDtSafety * cfl_dt(s);
    std::vector<DiagnosticsRecord> series;
    for (int i = 0; i <= 60; ++i) {
        if (i % 5 == 0) {
            series.push_back(record(s, kDefaultMaxMoment));
        }
        s = step(s, dt);
    }
    double energy = 0.0;
    double skew = 0.0;
    for (const auto& r : series) {
        const double scale = std::max({std::abs(r.dE_dt), std::abs(r.inj), std::abs(r.visc)});
        energy = std::max(energy, std::abs(r.dE_dt + r.visc - r.inj) / scale);
        skew = std::max(skew, std::abs(r.nl_transfer) / std::sqrt(r.H[0] * r.Hbar[1] * r.Hbar[0]));
    }
    LadderInputs li;
    li.nu = p.nu;
    li.alpha = p.alpha;
    li.ell = forcing_length(grid, 3);
    const LadderReport l0 = ladder_check(series, 0, li);
    CheckResult r = leq("energy_identity", energy, 1e-10,
                        "skew " + fmt(skew) + ", ladder N=0 pass fraction " + fmt(l0.pass_fraction));
    r.passed = r.passed && skew <= 1e-11 && l0.pass_fraction == 1.0;
    return r;
}

CheckResult unforced_decay(int n, int steps) {
    const TorusGrid grid = make_grid(n, kTwoPi);
    const ModelParams p{0.05, 0.2, ModelKind::MlAlpha};
    SimState s = make_state(taylor_green(grid, 1.0), p);
    const double dt = kDtSafety * cfl_dt(s);
    const double k0 = grid.k0();
    auto energy = [&](const SimState& st) {
        const auto hb = filtered_moments(st.u, p.alpha, 1);
        return 0.5 * (hb[0] + p.alpha * p.alpha * hb[1]);
    };
    const double e0 = energy(s);
    double worst = 0.0;
    double e_prev = e0;
    double t_prev = 0.0;
    for (int i = 1; i <= steps; ++i) {
        s = step(s, dt);
        const double e = energy(s);
        const double step_bound = e_prev * std::exp(-2.0 * p.nu * k0 * k0 * (s.t - t_prev));
        const double total_bound = e0 * std::exp(-2.0 * p.nu * k0 * k0 * s.t);
        worst = std::max({worst, e / step_bound - 1.0, e / total_bound - 1.0});
        e_prev = e;
        t_prev = s.t;
    }
    return leq("unforced_decay", worst, 1e-8,
               "max E(t) / (E(t0) exp(-2 nu k0^2 (t - t0))) - 1 over " + std::to_string(steps) +
                   " steps");
}

std::vector<double> alpha_limit_errors(int n, double alpha0, double t_end) {
    const TorusGrid grid = make_grid(n, kTwoPi);
    const SpectralVectorField u0 = random_field(grid, 17, 4);
    const SimState ref0 = make_state(u0, ModelParams{0.05, 0.0, ModelKind::MlAlpha});
    const double dt0 = kDtSafety * cfl_dt(ref0);
    const int steps = static_cast<int>(std::ceil(t_end / dt0));
    const double dt = t_end / steps;
    const SpectralVectorField ref = integrate(ref0, dt, steps);
    std::vector<double> out;
    for (double a = alpha0; out.size() < 3; a *= 0.5) {
        const SpectralVectorField u =
            integrate(make_state(u0, ModelParams{0.05, a, ModelKind::MlAlpha}), dt, steps);
        out.push_back(l2(u - ref) / l2(ref));
    }
    return out;
}

CheckResult alpha_limit(int n, double alpha0, double t_end) {
    const auto e = alpha_limit_errors(n, alpha0, t_end);
    const double r1 = e[0] / e[1];
    const double r2 = e[1] / e[2];
    CheckResult r = within("alpha_limit", std::min(r1, r2), 3.2, 4.8,
                           "ratios " + fmt(r1) + ", " + fmt(r2));
    r.passed = r.passed && std::max(r1, r2) <= 4.8;
    return r;
}

CheckResult checkpoint_round_trip() {
    const TorusGrid grid = make_grid(8, 2.0);
    SimState s = make_state(random_field(grid, 9), ModelParams{0.3, 0.1, ModelKind::LerayAlpha});
    s.t = 0.125;
    s.step = 42;
    std::stringstream buf;
    write_checkpoint(buf, make_checkpoint(s, 1234, 0.01));
    const std::string bytes = buf.str();
    const Checkpoint c = read_checkpoint(buf);
    bool ok = c.n == 8 && c.L == 2.0 && c.nu == 0.3 && c.alpha == 0.1 &&
              c.kind == ModelKind::LerayAlpha && c.t == 0.125 && c.seed == 1234 && c.dt == 0.01 &&
              c.step == 42;
    for (int comp = 0; comp < 3 && ok; ++comp) {
        const auto a = c.u.component(comp);
        const auto b = s.u.component(comp);
        ok = std::equal(a.begin(), a.end(), b.begin());
    }
    std::string bad = bytes;
    bad[4] = static_cast<char>(bad[4] + 1);
    std::stringstream bad_in(bad);
    bool rejected = false;
    try {
        read_checkpoint(bad_in);
    } catch (const FormatError&) {
        rejected = true;
    }
    return CheckResult{"checkpoint_round_trip", ok && rejected, ok && rejected ? 0.0 : 1.0,
                       "bit-identical, version mismatch rejected", ""};
}

CheckResult exponent_table_fidelity() {
    struct Expected {
        const char* quantity;
        Exponent exp;
    };
    const Expected expected[] = {
        {"ell_lambda_k_inv", {{5, 8}, {0, 1}, {0, 1}, {0, 1}}},
        {"Hbar1", {{5, 2}, {0, 1}, {0, 1}, {0, 1}}},
        {"Hbar2", {{3, 1}, {0, 1}, {0, 1}, {0, 1}}},
        {"Hbar3", {{7, 1}, {0, 1}, {0, 1}, {0, 1}}},
        {"d_F", {{9, 4}, {0, 1}, {0, 1}, {0, 1}}},
        {"ell2_kappa_N0", {{5, 2}, {-3, 2}, {0, 1}, {1, 1}}},
        {"ell2_kappa_10", {{1, 1}, {0, 1}, {1, 1}, {0, 1}}},
    };
    int mismatches = 0;
    std::string detail;
    for (const auto& e : expected) {
        const auto got = table_exponent(e.quantity, ModelColumn::MlAlpha);
        if (!got || !(*got == e.exp)) {
            ++mismatches;
            detail += std::string(e.quantity) + " ";
        }
    }
    return CheckResult{"exponent_table", mismatches == 0, static_cast<double>(mismatches),
                       "== 0 mismatches", detail.empty() ? "ML-alpha column" : detail};
}

} // namespace verify

std::vector<VerifyCheck> verify_checks() {
    using namespace verify;
    return {
        {"oracle_equivalence", [] { return oracle_equivalence(10, 8); }},
        {"oracle_sweep_n4_6_8", [] { return oracle_sweep_small(); }},
        {"oracle_trajectory", [] { return oracle_trajectory(); }},
        {"skew_symmetry", [] { return skew_symmetry(); }},
        {"projection", [] { return projection_properties(); }},
        {"parseval", [] { return parseval(); }},
        {"moment_log_convexity", [] { return moment_log_convexity(); }},
        {"forcing_shell", [] { return forcing_shell(); }},
        {"filter", [] { return filter_properties(); }},
        {"single_mode_closed_forms", [] { return single_mode_closed_forms(); }},
        {"integrator_linear_exact", [] { return linear_decay_exact(); }},
        {"integrator_order", [] { return integrator_order(16); }},
        {"energy_identity", [] { return energy_identity_short(); }},
        {"unforced_decay", [] { return unforced_decay(32, 150); }},
        {"alpha_limit", [] { return alpha_limit(32, 0.1, 0.5); }},
        {"checkpoint_round_trip", [] { return checkpoint_round_trip(); }},
        {"exponent_table", [] { return exponent_table_fidelity(); }},
    };
}

std::vector<CheckResult> run_verify_suite(std::ostream* progress) {
    std::vector<CheckResult> out;
    for (const VerifyCheck& c : verify_checks()) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = CheckResult{c.name, false, std::nan(""), "no exception", e.what()};
        }
        if (progress) {
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            *progress << (r.passed ? "  ok   " : "  FAIL ") << c.name << " (" << fmt(secs)
                      << " s)\n";
        }
        out.push_back(std::move(r));
    }
    return out;
}

void print_check_table(std::ostream& out, const std::vector<CheckResult>& results) {
    std::size_t width = 0;
    for (const auto& r : results) {
        width = std::max(width, r.name.size());
    }
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << std::string(width + 2 - r.name.size(), ' ')
            << fmt(r.value) << "  " << r.criterion;
        if (!r.detail.empty()) {
            out << "  (" << r.detail << ")";
        }
        out << "\n";
    }
}

} // namespace mlaf
