#ifndef WSFLOW_FLOWS_HPP
#define WSFLOW_FLOWS_HPP

#include <span>
#include <vector>

#include "wsflow/equilibrium.hpp"
#include "wsflow/kernels.hpp"
#include "wsflow/measures.hpp"

namespace wsflow {

/// Interaction-energy steepest descent flow from delta_0:
/// gamma(t) = (alpha_t Id)_# eta*, alpha_t = (-t r (2-r) E_K(eta*))^(1/(2-r)).
/// For r in (0,1) the curve only exists for t > 0 (no steepest descent
/// direction at the Dirac); requesting t = 0 there throws.
ScalingFamilyPoint interaction_flow_eval(const EquilibriumSolution& sol, double t);

/// The delayed family: stays at delta_0 until t0, then explodes (r in (1,2)).
ScalingFamilyPoint delayed_interaction_flow_eval(const EquilibriumSolution& sol,
                                                 double t0, double t);

struct OneParticlePoint {
    std::vector<double> position;
    bool reached = false;  // true once the particle sits at q
};

/// One-particle discrepancy flow toward delta_q for r in (1,2):
/// x(t) = q - (q-p)/|q-p| (|q-p|^(2-r) - r(2-r) t)^(1/(2-r)), absorbed at
/// t_* = |q-p|^(2-r) / (r(2-r)).
OneParticlePoint one_particle_eval(std::span<const double> p, std::span<const double> q,
                                   double r, double t);
double one_particle_absorption_time(double dist, double r);

/// Explicit 1D discrepancy flow toward delta_q (negative distance kernel),
/// evaluated pointwise on the quantile grid:
///   min{Q0 + 2st, q} below q, the constant q on ties, max{Q0 + 2st - 2t, q}
/// above q.  Output is nondecreasing.
QuantileGrid disc1d_flow_eval(const QuantileGrid& q0, double q, double t);

/// Support curve of the initial steepest-descent direction of the
/// discrepancy at delta_{-e1} toward delta_{e1} (r = 1):
/// gamma_v(t) = ((t-1) e1 - E t Id)_# eta*.
ScalingFamilyPoint geodesic_comparison_eval(const EquilibriumSolution& sol, double t);

/// Interaction explosion recentered on the one-particle flow (r in (1,2)):
/// (alpha_t Id + x(t))_# eta* before absorption, (alpha_t Id + q)_# after.
ScalingFamilyPoint centered_composite_eval(const EquilibriumSolution& sol,
                                           std::span<const double> p,
                                           std::span<const double> q, double t);

/// Dirac flow restricted to the line of point masses: moves toward q at unit
/// speed and stays there.
double dirac_line_flow(double x0, double q, double t);

/// Mean / standard deviation coordinates of the uniform family
/// U[m - sqrt(3) sigma, m + sqrt(3) sigma].
struct MSigmaState {
    double m = 0.0;
    double sigma = 0.0;
};

struct MSigmaGrad {
    bool unique = true;  // false marks a subgradient set instead of a gradient
    double dm = 0.0;
    double dsigma = 0.0;
};

struct MSigmaEval {
    double value = 0.0;
    MSigmaGrad grad;
};

/// Discrepancy of U[m - sqrt(3) s, m + sqrt(3) s] against the target measure
/// on the (m, sigma) plane.  The value is always computed by grid quadrature;
/// the gradient uses the closed outer-branch form for a Dirac target and
/// central finite differences of the quadrature value elsewhere (one-sided in
/// sigma at the clamped boundary sigma = 0).  A Dirac target with m = q and
/// sigma = 0 has a subgradient set instead of a gradient and is flagged.
MSigmaEval msigma_value_and_grad(const MSigmaState& state, const Kernel& kernel,
                                 const QuantileGrid& target);

/// Explicit Euler on -grad with sigma clamped at 0; subgradient-set states
/// are treated as stationary.
std::vector<MSigmaState> msigma_flow(const MSigmaState& initial, const Kernel& kernel,
                                     const QuantileGrid& target, double dt, int steps);

/// Splitting flow of the double-well potential 1/2 min((x-1)^2, (x+1)^2):
/// (1-w) delta_{-1+e^-t} + w delta_{1-e^-t}.
DiscreteMeasure double_well_split_eval(double w, double t);

} // namespace wsflow

#endif
