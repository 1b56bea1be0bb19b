#include "mlaf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mlaf/error.hpp"
#include "mlaf/ladder.hpp"

namespace mlaf {

Rational Rational::reduced() const {
    long g = std::gcd(num, den);
    if (g == 0) {
        g = 1;
    }
    Rational r{num / g, den / g};
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    return r;
}

std::string Rational::str() const {
    const Rational r = reduced();
    if (r.den == 1) {
        return std::to_string(r.num);
    }
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string Exponent::str() const {
    std::string out = "Re^(" + re.str();
    if (re_per_inv_n.num != 0) {
        out += (re_per_inv_n.num < 0 ? " - " : " + ") +
               Rational{std::abs(re_per_inv_n.num), re_per_inv_n.den}.str() + "/N";
    }
    out += ")";
    if (log_re.num != 0 || log_per_inv_n.num != 0) {
        out += " (ln Re)^(";
        if (log_re.num != 0) {
            out += log_re.str();
        }
        if (log_per_inv_n.num != 0) {
            out += (log_re.num != 0 ? " + " : "") + log_per_inv_n.str() + "/N";
        }
        out += ")";
    }
    return out;
}

namespace {

Exponent power(long num, long den) { return Exponent{{num, den}, {0, 1}, {0, 1}, {0, 1}}; }

Exponent n_dependent(Rational base, Rational per_inv_n) {
    return Exponent{base, per_inv_n, {0, 1}, {1, 1}};
}

const Exponent kReLogRe{{1, 1}, {0, 1}, {1, 1}, {0, 1}};

std::vector<ExponentRow> build_table() {
    const std::nullopt_t none = std::nullopt;
    std::vector<ExponentRow> rows;
    rows.push_back({"ell_lambda_k_inv",
                    {power(3, 4), power(5, 8), power(5, 8), power(7, 12), power(5, 8)}});
    rows.push_back({"Hbar1", {power(3, 1), power(5, 2), power(5, 2), power(7, 3), power(5, 2)}});
    rows.push_back({"Hbar2", {none, power(3, 1), power(3, 1), power(8, 3), power(3, 1)}});
    rows.push_back({"Hbar3", {none, none, none, power(3, 1), power(7, 1)}});
    rows.push_back({"d_F", {none, power(9, 4), power(9, 5), power(9, 7), power(9, 4)}});
    rows.push_back(
        {"ell2_kappa_Nr", {none, power(11, 4), power(11, 4), power(17, 4), power(5, 2)}});
    rows.push_back({"ell2_kappa_10", {kReLogRe, kReLogRe, kReLogRe, kReLogRe, kReLogRe}});
    rows.push_back(
        {"ubar_inf_sq", {none, power(11, 4), power(11, 4), power(5, 2), power(11, 4)}});
    rows.push_back(
        {"grad_ubar_inf", {none, power(35, 16), power(35, 16), power(17, 12), power(5, 2)}});
    rows.push_back({"ell2_kappa_N0",
                    {none, n_dependent({11, 4}, {-7, 4}), n_dependent({11, 4}, {-7, 4}),
                     n_dependent({17, 12}, {-5, 12}), n_dependent({5, 2}, {-3, 2})}});
    return rows;
}

double growth(const Exponent& e, double re, int n = 1) {
    double v = std::pow(re, e.re_power(n));
    const double lp = e.log_power(n);
    if (lp != 0.0) {
        v *= std::pow(std::log(re), lp);
    }
    return v;
}

bool relative_leq(double a, double b, double slack) {
    return a <= b + slack * std::max(std::abs(a), std::abs(b));
}

} // namespace

const std::vector<ExponentRow>& exponent_table() {
    static const std::vector<ExponentRow> table = build_table();
    return table;
}

std::optional<Exponent> table_exponent(std::string_view quantity, ModelColumn column) {
    for (const ExponentRow& row : exponent_table()) {
        if (row.quantity == quantity) {
            return row.columns[static_cast<std::size_t>(column)];
        }
    }
    throw DomainError("unknown table quantity: " + std::string(quantity));
}

BoundReport bound_suite(const BoundInputs& in) {
    const auto& series = in.series;
    if (series.empty()) {
        throw DomainError("bound_suite: empty series");
    }
    const int nmax = series.front().max_order();
    if (nmax < 3) {
        throw DomainError("bound_suite: needs moments up to order 3");
    }
    const int kmax = std::min(in.kappa_max_order, nmax - 1);
    const double a = in.alpha;
    const double a2 = a * a;
    const double vol = in.length * in.length * in.length;
    const double k0 = 2.0 * std::acos(-1.0) / in.length;

    BoundReport rep;
    rep.ell = in.ell;
    rep.k_f = 1.0 / in.ell;
    rep.gr = in.ell * in.ell * in.ell * in.f_rms / (in.nu * in.nu);

    double tau_value = 0.0;
    bool kappa_ok = true;
    if (in.f_rms > 0.0) {
        if (rep.gr > 1.0) {
            tau_value = tau(rep.gr, in.ell, in.nu);
            rep.tau = tau_value;
        } else {
            kappa_ok = false;
            rep.notices.push_back("Gr <= 1: tau undefined, kappa and J rows skipped");
        }
    } else {
        rep.tau = 0.0;
        rep.notices.push_back("unforced run: tau taken as 0");
    }

    // Layout of the averaged vector.
    const std::size_t i_h0 = 0;
    const std::size_t i_h1 = 1;
    const std::size_t i_hbar = 2;
    const std::size_t i_f = i_hbar + nmax + 1;
    const std::size_t i_j = i_f + nmax + 1;
    const std::size_t i_sup2 = i_j + nmax;
    const std::size_t i_grad = i_sup2 + 1;
    const std::size_t i_kappa = i_grad + 1;
    // kappa pairs: (N, 0) for N = 1..kmax, (N, 1) for N = 2..kmax
    std::vector<std::pair<int, int>> pairs;
    for (int n = 1; n <= kmax; ++n) {
        pairs.emplace_back(n, 0);
    }
    for (int n = 2; n <= kmax; ++n) {
        pairs.emplace_back(n, 1);
    }
    const std::size_t width = i_kappa + pairs.size();

    AverageAccumulator acc(in.spinup, width);
    std::vector<double> row(width);
    std::vector<double> kappa_min(pairs.size(), std::numeric_limits<double>::infinity());

    for (const DiagnosticsRecord& r : series) {
        for (int n = 1; n < nmax; ++n) {
            const double slack = 1e-12;
            if (!relative_leq(r.Hbar[n] * r.Hbar[n], r.Hbar[n - 1] * r.Hbar[n + 1], slack) ||
                !relative_leq(r.H[n] * r.H[n], r.H[n - 1] * r.H[n + 1], slack)) {
                rep.log_convexity_ok = false;
            }
        }
        const double scale = std::max({std::abs(r.dE_dt), std::abs(r.inj), std::abs(r.visc)});
        if (scale > 0.0) {
            rep.energy_residual_max_rel = std::max(
                rep.energy_residual_max_rel, std::abs(r.dE_dt + r.visc - r.inj) / scale);
        }
        rep.agmon_c = std::max(rep.agmon_c, r.sup_ubar / std::pow(r.Hbar[1] * r.Hbar[2], 0.25));
        rep.agmon_grad_c = std::max(rep.agmon_grad_c,
                                    r.sup_grad_ubar / std::pow(r.Hbar[2] * r.Hbar[3], 0.25));

        std::fill(row.begin(), row.end(), 0.0);
        row[i_h0] = r.H[0];
        row[i_h1] = r.H[1];
        std::vector<double> j(nmax);
        for (int n = 0; n <= nmax; ++n) {
            row[i_hbar + n] = r.Hbar[n];
            row[i_f + n] = f_moment(r, n, tau_value);
        }
        for (int n = 0; n < nmax; ++n) {
            j[n] = j_moment(r, n, tau_value, a);
            row[i_j + n] = j[n];
        }
        row[i_sup2] = r.sup_ubar * r.sup_ubar;
        row[i_grad] = r.sup_grad_ubar;
        if (kappa_ok && j[0] > 0.0) {
            std::vector<double> ks(pairs.size());
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                const auto [n, rr] = pairs[p];
                ks[p] = kappa(j[n], j[rr], n, rr);
                row[i_kappa + p] = ks[p] * ks[p];
                kappa_min[p] = std::min(kappa_min[p], ks[p]);
                if (ks[p] < k0 * (1.0 - 1e-12)) {
                    rep.kappa_floor_ok = false;
                }
            }
            // kappa_{N,0}^{2N} = kappa_{N,1}^{2(N-1)} kappa_{1,0}^2
            for (int n = 2; n <= kmax; ++n) {
                const double lhs = std::pow(ks[n - 1], 2.0 * n);
                const double rhs =
                    std::pow(ks[kmax + n - 2], 2.0 * (n - 1)) * ks[0] * ks[0];
                rep.kappa_chain_identity_max_rel = std::max(
                    rep.kappa_chain_identity_max_rel, std::abs(lhs - rhs) / std::abs(rhs));
            }
        }
        acc.add(r.t, row);
    }
    const std::vector<double> avg = acc.mean();

    const ReynoldsResult rr = reynolds(avg[i_h0], in.ell, in.nu, in.length);
    rep.U = rr.U;
    rep.re = rr.Re;
    rep.eps = in.nu * avg[i_h1] / vol;
    rep.lambda_k_inv = std::pow(rep.eps / (in.nu * in.nu * in.nu), 0.25);
    rep.ell_lambda_k_inv = in.ell * rep.lambda_k_inv;
    rep.grashof_ratio = rep.gr / (rep.re * rep.re + rep.re);
    rep.avg_grad_sup_ratio =
        avg[i_grad] / std::pow(avg[i_hbar + 3] * avg[i_hbar + 2], 0.25);

    for (int n = 0; n <= nmax; ++n) {
        rep.avg_F.push_back(avg[i_f + n]);
    }
    for (int n = 0; n < nmax; ++n) {
        rep.avg_J.push_back(avg[i_j + n]);
    }

    rep.h1_lhs = avg[i_hbar + 1];
    rep.h1_rhs = std::sqrt(avg[i_hbar + 0] * avg[i_hbar + 2]);
    rep.h1_interpolation_ok = relative_leq(rep.h1_lhs, rep.h1_rhs, 1e-12);

    if (kappa_ok && !(avg[i_j] > 0.0)) {
        kappa_ok = false;
        rep.notices.push_back("J_0 vanishes: kappa rows skipped");
    }
    if (kappa_ok) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [n, r] = pairs[p];
            KappaEntry e;
            e.n = n;
            e.r = r;
            e.mean_square = avg[i_kappa + p];
            e.ratio_of_averages = kappa(avg[i_j + n], avg[i_j + r], n, r);
            e.min_over_k0 = kappa_min[p] / k0;
            rep.kappa.push_back(e);
        }
        for (int n = 2; n <= kmax; ++n) {
            const double lhs = avg[i_kappa + n - 1];
            const double rhs = std::pow(avg[i_kappa + kmax + n - 2], (n - 1.0) / n) *
                               std::pow(avg[i_kappa], 1.0 / n);
            if (!relative_leq(lhs, rhs, 1e-12)) {
                rep.kappa_chain_ok = false;
            }
        }
    }

    const double lambda1 = k0 * k0;
    if (a > 0.0) {
        rep.v_alpha = std::pow(in.length / std::sqrt(in.ell * a), 3.0);
        const double base = vol * std::pow(in.ell, -4.0) / (a2 * std::pow(lambda1, 1.5));
        rep.d_f_bound = std::pow(base, 0.75) * std::pow(rep.re, 2.25);
    } else {
        rep.notices.push_back("alpha = 0: alpha-dependent rows, V_alpha and d_F skipped");
    }

    // Table rows, ML-alpha column, prefactor 1.
    const double re = rep.re;
    const double nu2 = in.nu * in.nu;
    const double ell = in.ell;
    const bool has_log = re > 1.0;
    if (!has_log) {
        rep.notices.push_back("Re <= 1: rows containing ln Re skipped");
    }
    auto add = [&](const std::string& q, int n, double lhs, double rhs) {
        rep.table_ratios.push_back({q, n, lhs, rhs, lhs / rhs});
    };
    auto exp_of = [&](const char* q) { return *table_exponent(q, ModelColumn::MlAlpha); };

    add("ell_lambda_k_inv", 0, rep.ell_lambda_k_inv, growth(exp_of("ell_lambda_k_inv"), re));
    if (a > 0.0) {
        add("Hbar1", 0, avg[i_hbar + 1],
            nu2 * vol / (a * std::pow(ell, 3.0)) * growth(exp_of("Hbar1"), re));
        add("Hbar2", 0, avg[i_hbar + 2],
            nu2 * vol / (a2 * std::pow(ell, 4.0)) * growth(exp_of("Hbar2"), re));
        add("ubar_inf_sq", 0, avg[i_sup2],
            nu2 / (ell * ell) * *rep.v_alpha * growth(exp_of("ubar_inf_sq"), re));
    }
    add("Hbar3", 0, avg[i_hbar + 3], nu2 * vol * std::pow(ell, -8.0) * growth(exp_of("Hbar3"), re));
    add("grad_ubar_inf", 0, avg[i_grad],
        in.nu / (ell * ell) * growth(exp_of("grad_ubar_inf"), re));
    if (kappa_ok && has_log) {
        const double re_log = growth(exp_of("ell2_kappa_10"), re);
        add("ell2_kappa_10", 1, ell * ell * avg[i_kappa], re_log);
        for (int n = 2; n <= kmax; ++n) {
            add("ell2_kappa_Nr", n, ell * ell * avg[i_kappa + kmax + n - 2],
                growth(exp_of("ell2_kappa_Nr"), re) + re_log);
            add("ell2_kappa_N0", n, ell * ell * avg[i_kappa + n - 1],
                growth(exp_of("ell2_kappa_N0"), re, n) + re_log);
        }
    }
    return rep;
}

} // namespace mlaf
