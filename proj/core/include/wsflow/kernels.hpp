#ifndef WSFLOW_KERNELS_HPP
#define WSFLOW_KERNELS_HPP

#include <span>
#include <vector>

#include "wsflow/measures.hpp"

namespace wsflow {

/// Riesz kernel K(x,y) = -|x-y|^r with r in (0,2), or the compactly
/// supported Wendland-type kernel (1 - |x-y|/2)^2 (|x-y| + 1) on |x-y| <= 2
/// (1D only).
struct Kernel {
    enum class Type { Riesz, Wendland };
    Type type = Type::Riesz;
    double r = 1.0;

    static Kernel riesz(double r);
    static Kernel wendland();
};

/// Three-term split of the squared discrepancy D_K^2(mu, nu):
/// interaction E_K(mu), potential V_{K,nu}(mu), and the constant E_K(nu).
struct EnergyReport {
    double interaction = 0.0;
    double potential = 0.0;
    double target_self_energy = 0.0;
    double discrepancy = 0.0;  // sum of the three terms
};

double kernel_eval(const Kernel& k, std::span<const double> x, std::span<const double> y);

/// E_K(mu) = 1/2 sum_ij w_i w_j K(x_i, x_j); fixed summation order, partials
/// folded sequentially so any thread count gives bit-identical results.
double interaction_energy(const Kernel& k, const DiscreteMeasure& m, unsigned threads = 1);

/// V_{K,nu}(mu) = sum_i w_i V(x_i) with V(x) = -sum_j v_j K(x, y_j).
double potential_energy(const Kernel& k, const DiscreteMeasure& m,
                        const DiscreteMeasure& target, unsigned threads = 1);

EnergyReport discrepancy(const Kernel& k, const DiscreteMeasure& m,
                         const DiscreteMeasure& target, unsigned threads = 1);

/// Negative-distance-kernel discrepancy in quantile space by midpoint
/// quadrature of the L^2 representation
///   int (1-2s)(Q_mu + Q_nu) ds + int int |Q_mu(s) - Q_nu(t)| dt ds.
double discrepancy_1d_quantile(const QuantileGrid& q_mu, const QuantileGrid& q_nu,
                               unsigned threads = 1);

/// grad G at every atom, G(x) = int K(x,y) dmu(y) for the Riesz kernel with
/// r in [1,2); coincident pairs contribute zero.  The steepest descent
/// velocity field is -grad G.  Flat M x dim layout.
std::vector<double> grad_interaction_field(const Kernel& k, const DiscreteMeasure& m,
                                           unsigned threads = 1);

struct ParticleObjective {
    double value = 0.0;
    std::vector<double> grad;  // flat M x dim
};

/// F_M at M particle positions against an atomic target:
///   -1/(2M^2) sum |x_i - x_j|^r + 1/M sum_i sum_p w_p |x_i - y_p|^r
/// with its exact gradient under the zero-at-coincidence convention.
ParticleObjective particle_objective(int dim, std::span<const double> points,
                                     const DiscreteMeasure& target, double r,
                                     unsigned threads = 1);

/// Largest lambda admissible at the midpoint of the two-atom geodesic
/// mu = (delta_0 + delta_{(s, s/2)})/2 -> nu = (delta_0 + delta_{(s, -s/2)})/2;
/// diverges to -infinity as s -> 0+, witnessing that the interaction energy
/// is not lambda-convex along geodesics in d >= 2.
double convexity_lambda_bound(double r, double s);

/// True iff lambda-convexity fails at the geodesic midpoint for the witness
/// configuration above.
bool convexity_violation_witness(double r, double s, double lambda);

} // namespace wsflow

#endif
