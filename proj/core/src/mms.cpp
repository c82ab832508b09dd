#include "wsflow/mms.hpp"

#include <cmath>
#include <stdexcept>

namespace wsflow {

double h_tau_eval(double t, double s, double tau, double r) {
    if (!(t > 0.0)) throw std::invalid_argument("h_tau_eval: t must be positive");
    return std::pow(s, 1.0 / (2.0 - r)) * std::pow(t, (1.0 - r) / (2.0 - r)) - t + tau;
}

double solve_next_time(double s, double tau, double r, const RootSolverConfig& cfg) {
    if (!(tau > 0.0)) throw std::invalid_argument("solve_next_time: tau must be positive");
    if (!(r > 0.0 && r < 2.0)) throw std::invalid_argument("solve_next_time: r must lie in (0,2)");
    if (s < 0.0) throw std::invalid_argument("solve_next_time: s must be >= 0");
    if (r == 1.0) return s + tau;
    if (s == 0.0) return tau;

    const double eps = 1e-9;
    double lo = s + std::min(2.0 - r, 1.0) * tau * (1.0 - eps);
    double hi = s + tau * (1.0 + eps);
    // h > 0 left of the root and h < 0 right of it
    int doublings = 0;
    while (h_tau_eval(hi, s, tau, r) > 0.0) {
        hi = s + 2.0 * (hi - s);
        if (++doublings > 64) throw std::runtime_error("solve_next_time: bracket expansion failed");
    }
    doublings = 0;
    while (h_tau_eval(lo, s, tau, r) < 0.0) {
        lo = s + 0.5 * (lo - s);
        if (++doublings > 64) throw std::runtime_error("solve_next_time: bracket expansion failed");
    }

    // Newton in u = t^(1/(2-r)) keeps the derivative tame for r near 2:
    // H(u) = sigma u^(1-r) - u^(2-r) + tau, sigma = s^(1/(2-r))
    const double inv_exp = 1.0 / (2.0 - r);
    const double sigma = std::pow(s, inv_exp);
    double u_lo = std::pow(lo, inv_exp);
    double u_hi = std::pow(hi, inv_exp);
    auto h_of_u = [&](double u) {
        return sigma * std::pow(u, 1.0 - r) - std::pow(u, 2.0 - r) + tau;
    };
    auto dh_of_u = [&](double u) {
        return (1.0 - r) * sigma * std::pow(u, -r) - (2.0 - r) * std::pow(u, 1.0 - r);
    };

    double u = 0.5 * (u_lo + u_hi);
    for (int it = 0; it < cfg.max_iter; ++it) {
        const double value = h_of_u(u);
        const double t = std::pow(u, 2.0 - r);
        if (std::abs(value) <= cfg.abs_tol * (1.0 + t)) return t;
        if (value > 0.0) {
            u_lo = std::max(u_lo, u);
        } else {
            u_hi = std::min(u_hi, u);
        }
        const double slope = dh_of_u(u);
        double next = u - value / slope;
        if (!(next > u_lo && next < u_hi) || slope == 0.0) {
            next = 0.5 * (u_lo + u_hi);  // bisection safeguard
        }
        if (next == u && u_hi - u_lo <= cfg.rel_tol * u) return t;
        u = next;
    }
    const double t = std::pow(u, 2.0 - r);
    if (std::abs(h_of_u(u)) <= 1e3 * cfg.abs_tol * (1.0 + t)) return t;
    throw std::runtime_error("solve_next_time: Newton iteration did not converge");
}

ScalingFamilyPoint MmsTrajectory::measure_at(std::size_t n) const {
    if (n >= times.size()) throw std::out_of_range("MmsTrajectory::measure_at: step out of range");
    const double r = solution.r;
    const double scale = std::pow(-times[n] * r * solution.energy, 1.0 / (2.0 - r));
    return {solution.eta_star, scale, std::vector<double>(solution.d, 0.0)};
}

MmsTrajectory run_mms(double tau, double r, int n_steps, const EquilibriumSolution& sol,
                      const RootSolverConfig& cfg) {
    if (n_steps < 1) throw std::invalid_argument("run_mms: n_steps must be >= 1");
    MmsTrajectory traj;
    traj.tau = tau;
    traj.solution = sol;
    traj.times.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.times.push_back(0.0);
    for (int n = 0; n < n_steps; ++n) {
        traj.times.push_back(solve_next_time(traj.times.back(), tau, r, cfg));
    }
    return traj;
}

FCurves f_curves(const MmsTrajectory& traj, std::span<const double> t_grid) {
    const double r = traj.solution.r;
    const double tau = traj.tau;
    const std::size_t n_steps = traj.times.size() - 1;
    const double t_max = static_cast<double>(n_steps) * tau;

    FCurves out;
    out.f_tau.reserve(t_grid.size());
    out.f_limit.reserve(t_grid.size());
    for (double t : t_grid) {
        if (t < 0.0 || t > t_max * (1.0 + 1e-12)) {
            throw std::out_of_range("f_curves: t outside the trajectory range");
        }
        // f_tau is constant on ((n-1) tau, n tau]
        std::size_t n = (t <= 0.0) ? 0
                                   : static_cast<std::size_t>(std::ceil(t / tau - 1e-12));
        n = std::min(n, n_steps);
        const double f_tau = std::pow(traj.times[n], 1.0 / (2.0 - r));
        const double f_lim = std::pow((2.0 - r) * t, 1.0 / (2.0 - r));
        out.f_tau.push_back(f_tau);
        out.f_limit.push_back(f_lim);
        out.sup_diff = std::max(out.sup_diff, std::abs(f_tau - f_lim));
    }
    return out;
}

bool error_bound_check(const MmsTrajectory& traj, std::size_t n) {
    if (n < 1 || n >= traj.times.size()) {
        throw std::invalid_argument("error_bound_check: n out of range");
    }
    const double r = traj.solution.r;
    const double tau = traj.tau;
    const double lhs = std::abs(traj.times[n] - (2.0 - r) * static_cast<double>(n) * tau);
    const double factor = std::abs(r - 1.0);
    const double bound =
        tau * factor *
        (1.0 + 1.0 / (4.0 - 2.0 * r) + std::log(static_cast<double>(n)) / (4.0 - 2.0 * r));
    return lhs <= bound + 1e-12 * (1.0 + lhs);
}

} // namespace wsflow
