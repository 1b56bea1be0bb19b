#pragma once

#include <span>
#include <vector>

#include "mlaf/integrator.hpp"

namespace mlaf {

/// One time sample of every moment and energy-balance functional.
struct DiagnosticsRecord {
    double t = 0.0;
    std::vector<double> H;    ///< Sobolev moments of u, orders 0..N_max
    std::vector<double> Hbar; ///< Sobolev moments of ubar
    std::vector<double> Phi;  ///< Sobolev moments of f
    /// d/dt Hbar_N evaluated from the right-hand side, orders 0..N_max.
    std::vector<double> dHbar_dt;
    double sup_ubar = 0.0;
    double sup_grad_ubar = 0.0;
    /// d/dt of E = (Hbar_0 + alpha^2 Hbar_1) / 2, from the right-hand side.
    double dE_dt = 0.0;
    double inj = 0.0;  ///< <f, ubar>
    double visc = 0.0; ///< nu (Hbar_1 + alpha^2 Hbar_2)
    double nl_transfer = 0.0; ///< <P(a.grad b), ubar>, zero in exact arithmetic

    int max_order() const { return static_cast<int>(Hbar.size()) - 1; }
};

/// Evaluates all functionals of the current state. max_order >= 2.
DiagnosticsRecord record(const SimState& state, int max_order);

/// tau = l^2 / nu * (Gr ln Gr)^{-1/2}; throws DomainError when Gr <= 1.
double tau(double gr, double ell, double nu);

/// F_N = Hbar_N + tau Phi_N and J_N = F_N + 2 alpha^2 F_{N+1}.
double f_moment(const DiagnosticsRecord& rec, int order, double tau_value);
double j_moment(const DiagnosticsRecord& rec, int order, double tau_value, double alpha);

/// kappa_{N,r} = (J_N / J_r)^{1 / (2 (N - r))}.
double kappa(double j_n, double j_r, int n, int r);

/// Trapezoidal time average over samples with t >= spinup.
class AverageAccumulator {
public:
    AverageAccumulator(double spinup, std::size_t width);

    /// Samples must arrive in increasing t.
    void add(double t, std::span<const double> values);
    std::size_t samples() const { return count_; }
    /// Throws DomainError on an empty window.
    std::vector<double> mean() const;

private:
    double spinup_;
    std::size_t count_ = 0;
    double t_first_ = 0.0;
    double t_last_ = 0.0;
    std::vector<double> last_;
    std::vector<double> integral_;
};

/// Single-series convenience wrapper around AverageAccumulator.
double time_average(std::span<const double> t, std::span<const double> values, double spinup);

struct ReynoldsResult {
    double U = 0.0;
    double Re = 0.0;
};

/// U^2 = L^{-3} <||u||^2>, Re = U l / nu.
ReynoldsResult reynolds(double avg_h0, double ell, double nu, double length);

/// Shell-summed energy of u and ubar. Shell s collects the modes whose lattice
/// norm |m| rounds to s, so sum_s u[s] = H_0 / 2 and sum_s ubar[s] = Hbar_0 / 2.
struct EnergySpectrum {
    double k0 = 1.0;
    std::vector<double> u;
    std::vector<double> ubar;
};

EnergySpectrum energy_spectrum(const SpectralVectorField& u, double alpha);

} // namespace mlaf
