#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace mlaf {

struct CheckResult {
    std::string name;
    bool passed = false;
    double value = 0.0;      ///< measured quantity
    std::string criterion;   ///< what value was compared against
    std::string detail;
};

struct VerifyCheck {
    std::string name;
    std::function<CheckResult()> run;
};

/// Property suite: oracle equivalence, exact identities, convergence orders,
/// decay bound and the alpha -> 0 ratio test, on small fixed problems.
std::vector<VerifyCheck> verify_checks();

/// Runs every check, catching exceptions as failures.
std::vector<CheckResult> run_verify_suite(std::ostream* progress = nullptr);

/// One line per check: PASS/FAIL, name, value, criterion.
void print_check_table(std::ostream& out, const std::vector<CheckResult>& results);

namespace verify {

// Individual checks, shared with the acceptance suite.
CheckResult oracle_equivalence(int fields, int n);
CheckResult oracle_sweep_small();
CheckResult skew_symmetry();
CheckResult projection_properties();
CheckResult parseval();
CheckResult moment_log_convexity();
CheckResult forcing_shell();
CheckResult filter_properties();
CheckResult single_mode_closed_forms();
CheckResult linear_decay_exact();
CheckResult integrator_order(int n);
CheckResult oracle_trajectory();
CheckResult energy_identity_short();
CheckResult unforced_decay(int n, int steps);
CheckResult alpha_limit(int n, double alpha0, double t_end);
CheckResult checkpoint_round_trip();
CheckResult exponent_table_fidelity();

/// Endpoint errors against a fine reference for dt, dt/2, dt/4 and the two
/// successive ratios.
struct OrderStudy {
    std::vector<double> errors;
    std::vector<double> ratios;
};
OrderStudy integrator_order_study(int n);

/// ||u_alpha - u_0|| / ||u_0|| at t_end for alpha0, alpha0/2, alpha0/4.
std::vector<double> alpha_limit_errors(int n, double alpha0, double t_end);

} // namespace verify

} // namespace mlaf
