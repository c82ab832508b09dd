#ifndef WSFLOW_EQUILIBRIUM_HPP
#define WSFLOW_EQUILIBRIUM_HPP

#include <span>
#include <vector>

#include "wsflow/hypergeom.hpp"
#include "wsflow/measures.hpp"

namespace wsflow {

/// Solution of the unit-second-moment interaction-energy problem: the
/// minimizer eta* (uniform interval / beta-ball for d+r < 4, uniform sphere
/// for d+r >= 4) together with its energy E_K(eta*) < 0.
struct EquilibriumSolution {
    EquilibriumMeasure eta_star;
    double energy = 0.0;
    int d = 1;
    double r = 1.0;
};

/// Minimizer of E_K over probability measures with unit second moment.
/// The beta-ball scale solves m2(s) = 1 by bisection; the energy comes from
/// the closed sphere formula, the d=1, r=1 closed form, or adaptive
/// quadrature of the radial double integral.
EquilibriumSolution equilibrium_unit(int d, double r);

/// Scale mapping eta* to the proximal minimizer eta*_tau = (c_tau Id)_# eta*,
/// c_tau = (-tau r E_K(eta*))^(1/(2-r)).
double c_tau(double tau, const EquilibriumSolution& sol);

/// R_d = 1/2 * 2F1(-1/2, -(d-1)/2; d/2; 1) for d >= 3; the support radius of
/// the unit-speed sphere explosion.
double r_constant(int d);

/// int |x - y|^r dU_{R S^(d-1)}(y) as a function of |x|; inner and outer
/// hypergeometric branches agree at |x| = R.
double sphere_potential(double x_norm, double radius, double r, int d);
double sphere_potential(std::span<const double> x, double radius, double r, int d);

/// int |x - y|^r d eta(y) for a (possibly rescaled) equilibrium measure;
/// closed branch for spheres, adaptive quadrature for interval/ball variants.
double equilibrium_potential(double x_norm, const EquilibriumMeasure& eta, double r);

struct OptimalityResidual {
    double on_support_spread = 0.0;      // max - min of Phi over support probes
    double min_off_support_slack = 0.0;  // min over off-support probes of Phi - C
};

/// Evaluates Phi(x) = int K(x,y) d eta*_tau(y) + |x|^2 / (2 tau) at the given
/// probes and reports the equality/inequality residuals of the optimality
/// conditions (C taken as the mean of Phi over the support probes).
OptimalityResidual optimality_residual(double tau, int d, double r,
                                       std::span<const std::vector<double>> probes);

} // namespace wsflow

#endif
