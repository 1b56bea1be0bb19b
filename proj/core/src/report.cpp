#include "mlaf/report.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>
#include "mlaf/error.hpp"

namespace mlaf {

using nlohmann::json;

namespace {

json number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

json exponent_json(const Exponent& e) {
    return json{{"re", e.re.reduced().str()},
                {"re_per_inv_N", e.re_per_inv_n.reduced().str()},
                {"log_re", e.log_re.reduced().str()},
                {"log_per_inv_N", e.log_per_inv_n.reduced().str()},
                {"text", e.str()}};
}

double f_rms_of(const RunConfig& config, const DiagnosticsRecord& rec) {
    const double vol = config.grid.L * config.grid.L * config.grid.L;
    return std::sqrt(rec.Phi[0] / vol);
}

} // namespace

double auto_spinup(const RunConfig& config, std::span<const DiagnosticsRecord> series) {
    if (series.empty()) {
        throw DomainError("auto_spinup: empty series");
    }
    const double t0 = series.front().t;
    const double t1 = series.back().t;
    const double half = t0 + 0.5 * (t1 - t0);
    std::vector<double> t;
    std::vector<double> h0;
    for (const auto& r : series) {
        t.push_back(r.t);
        h0.push_back(r.H[0]);
    }
    const double avg = time_average(t, h0, half);
    const ReynoldsResult rr = reynolds(avg, config_ell(config), config.model.nu, config.grid.L);
    const double cap = 0.5 * (t1 - t0);
    if (!(rr.U > 0.0)) {
        return t0 + cap;
    }
    return t0 + std::min(5.0 * config_ell(config) / rr.U, cap);
}

RunAnalysis analyze_run(const RunConfig& config, std::span<const DiagnosticsRecord> series) {
    if (series.size() < 3) {
        throw DomainError("analyze_run: need at least 3 samples, got " +
                          std::to_string(series.size()));
    }
    RunAnalysis out;
    out.spinup_auto = !config.time.spinup.has_value();
    out.spinup = out.spinup_auto ? auto_spinup(config, series) : *config.time.spinup;
    if (out.spinup > series.back().t) {
        throw DomainError("time.spinup: exceeds the last sample time");
    }
    out.f_rms = f_rms_of(config, series.front());

    const double alpha = config.model.filter_alpha();
    const double ell = config_ell(config);

    BoundInputs bi;
    bi.series = series;
    bi.spinup = out.spinup;
    bi.length = config.grid.L;
    bi.nu = config.model.nu;
    bi.alpha = alpha;
    bi.ell = ell;
    bi.f_rms = out.f_rms;
    bi.kappa_max_order = kReportMaxRung;
    out.bounds = bound_suite(bi);

    const int max_rung = std::min(kReportMaxRung, series.front().max_order() - 2);
    for (int n = 0; n <= max_rung; ++n) {
        LadderInputs li;
        li.nu = config.model.nu;
        li.alpha = alpha;
        li.tau = out.bounds.tau.value_or(0.0);
        li.re = out.bounds.re;
        li.ell = ell;
        li.c_ref = reference_constant(n, config.diagnostics.ladder_C_ref);
        out.ladders.push_back(ladder_check(series, n, li));
    }

    for (const auto& r : series) {
        const double scale = std::sqrt(r.H[0] * r.Hbar[1] * r.Hbar[0]);
        if (scale > 0.0) {
            out.skew_residual_max_rel =
                std::max(out.skew_residual_max_rel, std::abs(r.nl_transfer) / scale);
        }
    }
    return out;
}

std::string report_json(const RunConfig& config, const RunAnalysis& a) {
    json j;
    json cfg = json::object();
    for (const auto& [k, v] : config_entries(config)) {
        cfg[k] = v;
    }
    j["config"] = cfg;
    j["seed"] = config.forcing.seed;
    j["spinup"] = a.spinup;
    j["spinup_auto"] = a.spinup_auto;

    const BoundReport& b = a.bounds;
    json bounds;
    bounds["U"] = number(b.U);
    bounds["Re"] = number(b.re);
    bounds["Gr"] = number(b.gr);
    bounds["f_rms"] = number(a.f_rms);
    bounds["eps"] = number(b.eps);
    bounds["lambda_k_inv"] = number(b.lambda_k_inv);
    bounds["ell_lambda_k_inv"] = number(b.ell_lambda_k_inv);
    bounds["ell"] = number(b.ell);
    bounds["k_f"] = number(b.k_f);
    bounds["tau"] = b.tau ? number(*b.tau) : json(nullptr);
    bounds["avg_F"] = b.avg_F;
    bounds["avg_J"] = b.avg_J;
    json kappa = json::array();
    for (const auto& k : b.kappa) {
        kappa.push_back({{"N", k.n},
                         {"r", k.r},
                         {"mean_square", number(k.mean_square)},
                         {"ell2_mean_square", number(b.ell * b.ell * k.mean_square)},
                         {"ratio_of_averages", number(k.ratio_of_averages)},
                         {"min_over_k0", number(k.min_over_k0)}});
    }
    bounds["kappa"] = kappa;
    bounds["d_F_bound"] = b.d_f_bound ? number(*b.d_f_bound) : json(nullptr);
    bounds["V_alpha"] = b.v_alpha ? number(*b.v_alpha) : json(nullptr);
    bounds["fitted"] = {{"grashof_over_re2_plus_re", number(b.grashof_ratio)},
                        {"agmon_ubar", number(b.agmon_c)},
                        {"agmon_grad_ubar", number(b.agmon_grad_c)},
                        {"avg_grad_ubar_over_hbar3_hbar2", number(b.avg_grad_sup_ratio)}};
    json ratios = json::array();
    for (const auto& r : b.table_ratios) {
        ratios.push_back({{"quantity", r.quantity},
                          {"N", r.order},
                          {"lhs", number(r.lhs)},
                          {"rhs", number(r.rhs)},
                          {"ratio", number(r.ratio)}});
    }
    bounds["table_ratios"] = ratios;
    bounds["notices"] = b.notices;
    j["bounds"] = bounds;

    json checks;
    checks["hbar1_interpolation"] = {{"lhs", number(b.h1_lhs)},
                                     {"rhs", number(b.h1_rhs)},
                                     {"pass", b.h1_interpolation_ok}};
    checks["kappa_chain_holder"] = b.kappa_chain_ok;
    checks["kappa_chain_identity_max_rel"] = number(b.kappa_chain_identity_max_rel);
    checks["kappa_floor"] = b.kappa_floor_ok;
    checks["log_convexity"] = b.log_convexity_ok;
    checks["energy_residual_max_rel"] = number(b.energy_residual_max_rel);
    checks["skew_residual_max_rel"] = number(a.skew_residual_max_rel);
    j["checks"] = checks;

    json ladders = json::array();
    for (const auto& l : a.ladders) {
        json pj = json::array();
        for (const auto& [p, c] : l.fitted_c_j) {
            pj.push_back({{"p", p}, {"fitted_c", number(c)}});
        }
        ladders.push_back({{"N", l.order},
                           {"c_ref", number(l.c_ref)},
                           {"samples", l.samples},
                           {"pass_fraction", number(l.pass_fraction)},
                           {"fitted_c", number(l.fitted_c)},
                           {"j_form", pj},
                           {"fd_max_rel_error", number(l.fd_max_rel_error)}});
    }
    j["ladders"] = ladders;

    json table = json::array();
    for (const auto& row : exponent_table()) {
        json cols = json::object();
        for (std::size_t c = 0; c < row.columns.size(); ++c) {
            cols[std::string(kModelColumnNames[c])] =
                row.columns[c] ? exponent_json(*row.columns[c]) : json(nullptr);
        }
        table.push_back({{"quantity", row.quantity}, {"columns", cols}});
    }
    j["exponent_table"] = table;
    return j.dump(2) + "\n";
}

} // namespace mlaf
