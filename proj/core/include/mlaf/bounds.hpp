#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlaf/diagnostics.hpp"

namespace mlaf {

struct Rational {
    long num = 0;
    long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// Lowest terms with a positive denominator.
    Rational reduced() const;
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
};

/// Growth law Re^{a + b/N} (ln Re)^{c + d/N}; rows without N-dependence
/// have b = d = 0.
struct Exponent {
    Rational re{0, 1};
    Rational re_per_inv_n{0, 1};
    Rational log_re{0, 1};
    Rational log_per_inv_n{0, 1};

    double re_power(int n = 1) const { return re.value() + re_per_inv_n.value() / n; }
    double log_power(int n = 1) const { return log_re.value() + log_per_inv_n.value() / n; }
    std::string str() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

enum class ModelColumn { Nse = 0, NsAlpha, Bardina, LerayAlpha, MlAlpha };
inline constexpr std::array<std::string_view, 5> kModelColumnNames{
    "NS", "NS-alpha", "Bardina", "Leray-alpha", "ML-alpha"};

struct ExponentRow {
    std::string quantity;
    std::array<std::optional<Exponent>, 5> columns;
};

/// Upper-bound growth exponents in Re, constants omitted. Quantity keys:
/// ell_lambda_k_inv, Hbar1, Hbar2, Hbar3, d_F, ell2_kappa_Nr, ell2_kappa_10,
/// ubar_inf_sq, grad_ubar_inf, ell2_kappa_N0.
const std::vector<ExponentRow>& exponent_table();
std::optional<Exponent> table_exponent(std::string_view quantity, ModelColumn column);

struct BoundInputs {
    std::span<const DiagnosticsRecord> series;
    double spinup = 0.0;
    double length = 0.0;
    double nu = 0.0;
    double alpha = 0.0; ///< filter width actually applied
    double ell = 0.0;
    double f_rms = 0.0;
    int kappa_max_order = 4;
};

/// LHS / RHS of one table row evaluated with prefactor 1.
struct RowRatio {
    std::string quantity;
    int order = 0; ///< N for N-dependent rows, else 0
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

struct KappaEntry {
    int n = 0;
    int r = 0;
    double mean_square = 0.0;        ///< <kappa_{N,r}^2>
    double ratio_of_averages = 0.0;  ///< (<J_N>/<J_r>)^{1/(2(N-r))}
    double min_over_k0 = 0.0;        ///< min over samples of kappa_{N,r} / k0
};

struct BoundReport {
    double U = 0.0;
    double re = 0.0;
    double gr = 0.0;
    double eps = 0.0;
    double lambda_k_inv = 0.0;
    double ell_lambda_k_inv = 0.0;
    double ell = 0.0;
    double k_f = 0.0; ///< 1 / ell
    std::optional<double> tau;
    std::vector<double> avg_F; ///< <F_N>, N = 0..N_max
    std::vector<double> avg_J; ///< <J_N>, N = 0..N_max-1
    std::vector<KappaEntry> kappa;
    std::optional<double> d_f_bound;
    std::optional<double> v_alpha;
    double grashof_ratio = 0.0;  ///< Gr / (Re^2 + Re)
    double agmon_c = 0.0;        ///< max ||ubar||_inf / (Hbar_1 Hbar_2)^{1/4}
    double agmon_grad_c = 0.0;   ///< max ||grad ubar||_inf / (Hbar_2 Hbar_3)^{1/4}
    double avg_grad_sup_ratio = 0.0; ///< <||grad ubar||_inf> / (<Hbar_3><Hbar_2>)^{1/4}
    std::vector<RowRatio> table_ratios;

    // Exact inequalities; all must hold on every run.
    double h1_lhs = 0.0;
    double h1_rhs = 0.0;
    bool h1_interpolation_ok = false;
    bool kappa_chain_ok = true;     ///< Hoelder bound on <kappa_{N,0}^2>
    double kappa_chain_identity_max_rel = 0.0;
    bool kappa_floor_ok = true;     ///< kappa_{N,r} >= k0 on every sample
    bool log_convexity_ok = true;
    double energy_residual_max_rel = 0.0;

    std::vector<std::string> notices;
};

/// Averages, length scales, Table-1 ratios and exact-inequality verdicts for
/// a completed run.
BoundReport bound_suite(const BoundInputs& inputs);

} // namespace mlaf
