#include "wsflow/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "wsflow/quadrature.hpp"

namespace wsflow {
namespace {

constexpr double kPi = 3.14159265358979323846;

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Radial density of the unit-scale beta ball in the angle variable rho = sin(theta):
// w(theta) = sin(theta)^(d-1) cos(theta)^(2 beta - 1) / Z on [0, pi/2],
// beta = 2 - (d+r)/2, Z = B(d/2, beta)/2.  For d = 1 the measure lives on
// [-pi/2, pi/2] and the sign carries the coordinate.
double angular_weight(double theta, int d, double beta) {
    return std::pow(std::sin(theta), d - 1) * std::pow(std::cos(theta), 2.0 * beta - 1.0);
}

// Average of |x - y|^r over the sphere of radius v, as a function of u = |x|.
double pair_kernel_radial(double u, double v, double r, int d) {
    const double hi = std::max(u, v);
    const double lo = std::min(u, v);
    if (hi == 0.0) return 0.0;
    const double z = (lo / hi) * (lo / hi);
    return std::pow(hi, r) * hypergeom_2f1(-0.5 * r, 0.5 * (2.0 - r - d), 0.5 * d, z);
}

double beta_exponent(int d, double r) { return 2.0 - 0.5 * (d + r); }

// E_K of the unit-second-moment beta ball by nested adaptive quadrature of
// the radial double integral; the boundary singularity of the density is
// tamed by the substitution rho = s sin(theta).
double beta_ball_energy(int d, double r, double s) {
    const double beta = beta_exponent(d, r);
    if (d == 1) {
        // full interval [-pi/2, pi/2], kernel |s sin a - s sin b|^r
        const double z = std::exp(log_beta(0.5, beta));  // int_{-pi/2}^{pi/2} cos^(2b-1) = B(1/2, b)
        auto inner = [&](double a) {
            auto f = [&](double b) {
                return std::pow(std::abs(std::sin(a) - std::sin(b)), r) *
                       std::pow(std::cos(b), 2.0 * beta - 1.0);
            };
            // split at the kink b = a
            return integrate(f, -0.5 * kPi, a, 1e-11) + integrate(f, a, 0.5 * kPi, 1e-11);
        };
        auto outer = [&](double a) {
            return inner(a) * std::pow(std::cos(a), 2.0 * beta - 1.0);
        };
        const double val = integrate(outer, -0.5 * kPi, 0.5 * kPi, 1e-9);
        return -0.5 * std::pow(s, r) * val / (z * z);
    }
    const double z = 0.5 * std::exp(log_beta(0.5 * d, beta));
    auto inner = [&](double a) {
        auto f = [&](double b) {
            return pair_kernel_radial(std::sin(a), std::sin(b), r, d) *
                   angular_weight(b, d, beta);
        };
        return integrate(f, 0.0, a, 1e-11) + integrate(f, a, 0.5 * kPi, 1e-11);
    };
    auto outer = [&](double a) { return inner(a) * angular_weight(a, d, beta); };
    const double val = integrate(outer, 0.0, 0.5 * kPi, 1e-9);
    return -0.5 * std::pow(s, r) * val / (z * z);
}

// bisection for the beta-ball scale with unit second moment
double solve_unit_scale(int d, double r) {
    auto m2 = [&](double s) { return s * s * static_cast<double>(d) / (4.0 - r); };
    double lo = 1e-9;
    double hi = 1.0;
    while (m2(hi) < 1.0) hi *= 2.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (m2(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

EquilibriumSolution equilibrium_unit(int d, double r) {
    if (d < 1) throw std::invalid_argument("equilibrium_unit: d must be >= 1");
    if (!(r > 0.0 && r < 2.0)) {
        throw std::invalid_argument("equilibrium_unit: r must lie in (0,2)");
    }
    EquilibriumSolution sol;
    sol.d = d;
    sol.r = r;
    if (d + r >= 4.0) {
        sol.eta_star = EquilibriumMeasure::uniform_sphere(d, 1.0);
        sol.energy = -0.5 * hypergeom_2f1_at_1(-0.5 * r, 0.5 * (2.0 - r - d), 0.5 * d);
        return sol;
    }
    const double s = solve_unit_scale(d, r);
    if (d == 1 && r == 1.0) {
        sol.eta_star = EquilibriumMeasure::uniform_interval(s);
        sol.energy = -s / 3.0;  // -1/2 E|X-Y| with E|X-Y| = 2s/3
        return sol;
    }
    sol.eta_star = EquilibriumMeasure::beta_ball(d, r, s);
    sol.energy = beta_ball_energy(d, r, s);
    return sol;
}

double c_tau(double tau, const EquilibriumSolution& sol) {
    if (!(tau > 0.0)) throw std::invalid_argument("c_tau: tau must be positive");
    return std::pow(-tau * sol.r * sol.energy, 1.0 / (2.0 - sol.r));
}

double r_constant(int d) {
    if (d < 3) throw std::domain_error("r_constant: requires d >= 3");
    return 0.5 * hypergeom_2f1_at_1(-0.5, -0.5 * (d - 1), 0.5 * d);
}

double sphere_potential(double x_norm, double radius, double r, int d) {
    if (!(radius > 0.0)) throw std::invalid_argument("sphere_potential: radius must be positive");
    const double a = -0.5 * r;
    const double b = 0.5 * (2.0 - r - d);
    const double c = 0.5 * d;
    if (x_norm <= radius) {
        const double z = (x_norm / radius) * (x_norm / radius);
        return std::pow(radius, r) * hypergeom_2f1(a, b, c, std::min(z, 1.0));
    }
    const double z = (radius / x_norm) * (radius / x_norm);
    return std::pow(x_norm, r) * hypergeom_2f1(a, b, c, z);
}

double sphere_potential(std::span<const double> x, double radius, double r, int d) {
    double sq = 0.0;
    for (double c : x) sq += c * c;
    return sphere_potential(std::sqrt(sq), radius, r, d);
}

double equilibrium_potential(double x_norm, const EquilibriumMeasure& eta, double r) {
    switch (eta.kind) {
        case EquilibriumKind::UniformSphere:
            return sphere_potential(x_norm, eta.scale, r, eta.dim);
        case EquilibriumKind::UniformInterval: {
            const double s = eta.scale;
            auto f = [&](double y) { return std::pow(std::abs(x_norm - y), r) / (2.0 * s); };
            return integrate(f, -s, std::min(x_norm, s), 1e-10) +
                   integrate(f, std::min(x_norm, s), s, 1e-10);
        }
        case EquilibriumKind::BetaBall: {
            const int d = eta.dim;
            const double beta = beta_exponent(d, eta.riesz_r);
            const double s = eta.scale;
            if (d == 1) {
                const double z = std::exp(log_beta(0.5, beta));
                const double split =
                    (x_norm < s) ? std::asin(x_norm / s) : 0.5 * kPi;
                auto f = [&](double b) {
                    return std::pow(std::abs(x_norm - s * std::sin(b)), r) *
                           std::pow(std::cos(b), 2.0 * beta - 1.0);
                };
                return (integrate(f, -0.5 * kPi, split, 1e-10) +
                        integrate(f, split, 0.5 * kPi, 1e-10)) / z;
            }
            const double z = 0.5 * std::exp(log_beta(0.5 * d, beta));
            const double split =
                (x_norm < s) ? std::asin(x_norm / s) : 0.5 * kPi;
            auto f = [&](double b) {
                return pair_kernel_radial(x_norm, s * std::sin(b), r, d) *
                       angular_weight(b, d, beta);
            };
            return (integrate(f, 0.0, split, 1e-10) +
                    integrate(f, split, 0.5 * kPi, 1e-10)) / z;
        }
    }
    return 0.0;
}

OptimalityResidual optimality_residual(double tau, int d, double r,
                                       std::span<const std::vector<double>> probes) {
    if (!(tau > 0.0)) throw std::invalid_argument("optimality_residual: tau must be positive");
    const EquilibriumSolution sol = equilibrium_unit(d, r);
    const double scale = c_tau(tau, sol);
    EquilibriumMeasure eta_tau = sol.eta_star;
    eta_tau.scale *= scale;

    const double support_radius = eta_tau.scale;
    const bool sphere = eta_tau.kind == EquilibriumKind::UniformSphere;

    auto phi = [&](double x_norm) {
        return -equilibrium_potential(x_norm, eta_tau, r) +
               x_norm * x_norm / (2.0 * tau);
    };

    std::vector<double> on_support;
    std::vector<double> off_support;
    for (const auto& x : probes) {
        double sq = 0.0;
        for (double c : x) sq += c * c;
        const double norm = std::sqrt(sq);
        const double value = phi(norm);
        const bool on = sphere ? std::abs(norm - support_radius) <= 1e-9 * (1.0 + support_radius)
                               : norm <= support_radius * (1.0 + 1e-9);
        (on ? on_support : off_support).push_back(value);
    }
    if (on_support.empty()) {
        throw std::invalid_argument("optimality_residual: no on-support probes");
    }

    OptimalityResidual res;
    double lo = on_support.front(), hi = on_support.front(), sum = 0.0;
    for (double v : on_support) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
    }
    res.on_support_spread = hi - lo;
    const double c_const = sum / static_cast<double>(on_support.size());
    double slack = 0.0;
    bool first = true;
    for (double v : off_support) {
        const double gap = v - c_const;
        if (first || gap < slack) slack = gap;
        first = false;
    }
    res.min_off_support_slack = off_support.empty() ? 0.0 : slack;
    return res;
}

} // namespace wsflow
