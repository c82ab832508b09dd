#ifndef WSFLOW_MMS_HPP
#define WSFLOW_MMS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wsflow/equilibrium.hpp"
#include "wsflow/measures.hpp"

namespace wsflow {

struct RootSolverConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_iter = 100;
};

/// h_tau(t, s) = s^(1/(2-r)) t^((1-r)/(2-r)) - t + tau for t > 0; its unique
/// positive zero is the next minimizing-movement time.
double h_tau_eval(double t, double s, double tau, double r);

/// Unique positive zero of t -> h_tau(t, s).  Exact shortcuts: s + tau for
/// r = 1 and tau for s = 0; otherwise safeguarded Newton in the substituted
/// variable u = t^(1/(2-r)), bracketed by the one-step bounds and expanded
/// geometrically (up to 2^6 doublings) if the sign condition fails.
double solve_next_time(double s, double tau, double r,
                       const RootSolverConfig& cfg = {});

/// Minimizing-movement trajectory of the interaction energy from delta_0:
/// the solved times t_{tau,0} = 0 < t_{tau,1} < ... and the base solution
/// needed to materialize mu_tau^n = ((-t_{tau,n} r E)^(1/(2-r)) Id)_# eta*.
struct MmsTrajectory {
    double tau = 0.0;
    EquilibriumSolution solution;
    std::vector<double> times;

    /// Measure at step n (on demand; trajectories store times only).
    ScalingFamilyPoint measure_at(std::size_t n) const;
};

MmsTrajectory run_mms(double tau, double r, int n_steps, const EquilibriumSolution& sol,
                      const RootSolverConfig& cfg = {});

struct FCurves {
    std::vector<double> f_tau;    // piecewise-constant scheme curve
    std::vector<double> f_limit;  // f(t) = ((2-r) t)^(1/(2-r))
    double sup_diff = 0.0;
};

/// Samples the scheme curve f_tau and its limit f on t_grid (within
/// [0, N tau]); the sup difference quantifies the convergence of the scheme.
FCurves f_curves(const MmsTrajectory& traj, std::span<const double> t_grid);

/// Logarithmic error bound |t_{tau,n} - (2-r) n tau| <=
/// tau |r-1| (1 + 1/(4-2r) + log(n)/(4-2r)), symmetric in |r-1| for both
/// exponent regimes.
bool error_bound_check(const MmsTrajectory& traj, std::size_t n);

} // namespace wsflow

#endif
