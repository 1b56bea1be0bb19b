#include "mlaf/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlaf/error.hpp"

namespace mlaf {

double reference_constant(int order, double prefactor) {
    return order == 0 ? 0.0 : prefactor * std::ldexp(1.0, order);
}

LadderReport ladder_check(std::span<const DiagnosticsRecord> series, int order,
                          const LadderInputs& in) {
    if (series.size() < 3) {
        throw DomainError("ladder_check: need at least 3 samples, got " +
                          std::to_string(series.size()));
    }
    if (order < 0 || order > series.front().max_order() - 2) {
        throw DomainError("ladder_check: order " + std::to_string(order) +
                          " needs moments up to " + std::to_string(order + 2));
    }
    const int n = order;
    const double a2 = in.alpha * in.alpha;
    const double re_log = in.re > 1.0 ? in.re * std::log(in.re) : 0.0;
    const double re_coeff = in.nu * re_log / (in.ell * in.ell);

    LadderReport rep;
    rep.order = order;
    rep.c_ref = in.c_ref;
    rep.samples = series.size();

    std::vector<int> powers;
    if (n == 0) {
        powers = {0};
    } else {
        powers = {1};
        if (n > 1) {
            powers.push_back(n);
        }
    }
    std::vector<double> fitted_j(powers.size(), 0.0);

    std::size_t passed = 0;
    for (const DiagnosticsRecord& r : series) {
        const double y = r.Hbar[n] + a2 * r.Hbar[n + 1];
        const double half_dy = 0.5 * (r.dHbar_dt[n] + a2 * r.dHbar_dt[n + 1]);
        const double dissip = in.nu * (r.Hbar[n + 1] + a2 * r.Hbar[n + 2]);
        const double forcing = std::sqrt(r.Hbar[n] * r.Phi[n]);
        const double bracket = half_dy + dissip - forcing;
        const double scale = std::max({std::abs(half_dy), dissip, forcing});
        const double gy = r.sup_grad_ubar * y;

        if (bracket <= in.c_ref * gy + kRoundoffSlack * scale) {
            ++passed;
        }
        if (gy > 0.0) {
            rep.fitted_c = std::max(rep.fitted_c, std::max(bracket, 0.0) / gy);
        }

        const double jn = j_moment(r, n, in.tau, in.alpha);
        const double half_dj = 0.5 * (r.dHbar_dt[n] + 2.0 * a2 * r.dHbar_dt[n + 1]);
        for (std::size_t i = 0; i < powers.size(); ++i) {
            const int p = powers[i];
            if (p == 0) {
                const double j1 = j_moment(r, 1, in.tau, in.alpha);
                const double denom = re_coeff * jn;
                if (denom > 0.0) {
                    fitted_j[i] = std::max(fitted_j[i], std::max(half_dj + in.nu * j1, 0.0) / denom);
                }
                continue;
            }
            const double jlow = j_moment(r, n - p, in.tau, in.alpha);
            if (!(jn > 0.0) || !(jlow > 0.0)) {
                continue;
            }
            const double depletion =
                in.nu * std::pow(jn, 1.0 + 1.0 / p) / std::pow(jlow, 1.0 / p);
            const double lhs = half_dj + depletion - re_coeff * jn;
            const double gj = r.sup_grad_ubar * jn;
            if (gj > 0.0) {
                fitted_j[i] = std::max(fitted_j[i], std::max(lhs, 0.0) / gj);
            }
        }
    }
    rep.pass_fraction = static_cast<double>(passed) / static_cast<double>(series.size());
    for (std::size_t i = 0; i < powers.size(); ++i) {
        rep.fitted_c_j.emplace_back(powers[i], fitted_j[i]);
    }

    auto y_of = [&](const DiagnosticsRecord& r) { return r.Hbar[n] + a2 * r.Hbar[n + 1]; };
    for (std::size_t i = 1; i + 1 < series.size(); i += 10) {
        const auto& prev = series[i - 1];
        const auto& next = series[i + 1];
        const double fd = (y_of(next) - y_of(prev)) / (next.t - prev.t);
        const double exact = series[i].dHbar_dt[n] + a2 * series[i].dHbar_dt[n + 1];
        const double denom = std::max({std::abs(exact), std::abs(fd), 1e-300});
        rep.fd_max_rel_error = std::max(rep.fd_max_rel_error, std::abs(fd - exact) / denom);
    }
    return rep;
}

} // namespace mlaf
