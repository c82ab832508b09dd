#include "wsflow/flows.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsflow {
namespace {

constexpr double kSqrt3 = 1.7320508075688772;

double norm_of(std::span<const double> v) {
    double sq = 0.0;
    for (double c : v) sq += c * c;
    return std::sqrt(sq);
}

QuantileGrid msigma_grid(const MSigmaState& st, std::size_t n) {
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = QuantileGrid::node(k, n);
        values[k] = st.m + 2.0 * kSqrt3 * st.sigma * (s - 0.5);
    }
    return QuantileGrid(std::move(values));
}

double msigma_value(const MSigmaState& st, const Kernel& kernel, const QuantileGrid& target) {
    const QuantileGrid q = msigma_grid(st, target.size());
    if (kernel.type == Kernel::Type::Riesz && kernel.r == 1.0) {
        return discrepancy_1d_quantile(q, target);
    }
    // atomize both grids and assemble the three-term decomposition
    const auto atoms = DiscreteMeasure::uniform_cloud(1, q.values());
    const auto target_atoms = DiscreteMeasure::uniform_cloud(1, target.values());
    return discrepancy(kernel, atoms, target_atoms).discrepancy;
}

bool constant_target(const QuantileGrid& target, double& q_out) {
    q_out = target[0];
    return target[0] == target[target.size() - 1];
}

} // namespace

ScalingFamilyPoint interaction_flow_eval(const EquilibriumSolution& sol, double t) {
    if (t < 0.0) throw std::invalid_argument("interaction_flow_eval: t must be >= 0");
    if (sol.r < 1.0 && t == 0.0) {
        throw std::invalid_argument(
            "interaction_flow_eval: no steepest descent direction at delta_0 for r < 1");
    }
    const double alpha =
        std::pow(-t * sol.r * (2.0 - sol.r) * sol.energy, 1.0 / (2.0 - sol.r));
    return {sol.eta_star, alpha, std::vector<double>(sol.d, 0.0)};
}

ScalingFamilyPoint delayed_interaction_flow_eval(const EquilibriumSolution& sol,
                                                 double t0, double t) {
    if (t0 < 0.0) throw std::invalid_argument("delayed_interaction_flow_eval: t0 must be >= 0");
    if (!(sol.r > 1.0) && t0 > 0.0) {
        throw std::invalid_argument(
            "delayed_interaction_flow_eval: positive length of stay requires r in (1,2)");
    }
    if (t < t0) return {sol.eta_star, 0.0, std::vector<double>(sol.d, 0.0)};
    return interaction_flow_eval(sol, t - t0);
}

double one_particle_absorption_time(double dist, double r) {
    return std::pow(dist, 2.0 - r) / (r * (2.0 - r));
}

OneParticlePoint one_particle_eval(std::span<const double> p, std::span<const double> q,
                                   double r, double t) {
    if (!(r > 1.0 && r < 2.0)) {
        throw std::invalid_argument("one_particle_eval: r must lie in (1,2)");
    }
    if (p.size() != q.size()) throw std::invalid_argument("one_particle_eval: dimension mismatch");
    if (t < 0.0) throw std::invalid_argument("one_particle_eval: t must be >= 0");
    std::vector<double> diff(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) diff[c] = q[c] - p[c];
    const double dist = norm_of(diff);
    if (dist == 0.0) throw std::invalid_argument("one_particle_eval: p and q must differ");

    OneParticlePoint out;
    const double t_star = one_particle_absorption_time(dist, r);
    if (t >= t_star) {
        out.position.assign(q.begin(), q.end());
        out.reached = true;
        return out;
    }
    const double radial =
        std::pow(std::pow(dist, 2.0 - r) - r * (2.0 - r) * t, 1.0 / (2.0 - r));
    out.position.resize(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
        out.position[c] = q[c] - diff[c] / dist * radial;
    }
    return out;
}

QuantileGrid disc1d_flow_eval(const QuantileGrid& q0, double q, double t) {
    if (t < 0.0) throw std::invalid_argument("disc1d_flow_eval: t must be >= 0");
    const std::size_t n = q0.size();
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = QuantileGrid::node(k, n);
        if (q0[k] < q) {
            values[k] = std::min(q0[k] + 2.0 * s * t, q);
        } else if (q0[k] > q) {
            values[k] = std::max(q0[k] + 2.0 * s * t - 2.0 * t, q);
        } else {
            values[k] = q;
        }
    }
    return QuantileGrid(std::move(values));
}

ScalingFamilyPoint geodesic_comparison_eval(const EquilibriumSolution& sol, double t) {
    if (sol.r != 1.0) {
        throw std::invalid_argument("geodesic_comparison_eval: defined for r = 1 only");
    }
    std::vector<double> shift(sol.d, 0.0);
    shift[0] = t - 1.0;
    return {sol.eta_star, -sol.energy * t, std::move(shift)};
}

ScalingFamilyPoint centered_composite_eval(const EquilibriumSolution& sol,
                                           std::span<const double> p,
                                           std::span<const double> q, double t) {
    if (!(sol.r > 1.0 && sol.r < 2.0)) {
        throw std::invalid_argument("centered_composite_eval: r must lie in (1,2)");
    }
    ScalingFamilyPoint out = interaction_flow_eval(sol, t);
    out.shift = one_particle_eval(p, q, sol.r, t).position;
    return out;
}

double dirac_line_flow(double x0, double q, double t) {
    if (t < 0.0) throw std::invalid_argument("dirac_line_flow: t must be >= 0");
    const double gap = q - x0;
    if (gap == 0.0) return q;
    const double step = std::min(t, std::abs(gap));
    return x0 + (gap > 0.0 ? step : -step);
}

MSigmaEval msigma_value_and_grad(const MSigmaState& state, const Kernel& kernel,
                                 const QuantileGrid& target) {
    if (state.sigma < 0.0) throw std::invalid_argument("msigma: sigma must be >= 0");
    MSigmaEval out;
    out.value = msigma_value(state, kernel, target);

    double q_target = 0.0;
    const bool dirac_target = constant_target(target, q_target);
    const bool riesz = kernel.type == Kernel::Type::Riesz && kernel.r == 1.0;

    if (riesz && dirac_target && std::abs(state.m - q_target) >= kSqrt3 * state.sigma) {
        // outer branch F = -sigma/sqrt(3) + |m - q|
        if (state.m == q_target) {
            out.grad.unique = false;  // sgn(0) is the whole interval [-1,1]
            return out;
        }
        out.grad.dm = (state.m > q_target) ? 1.0 : -1.0;
        out.grad.dsigma = -1.0 / kSqrt3;
        return out;
    }
    auto value_at = [&](double m, double sigma) {
        return msigma_value({m, sigma}, kernel, target);
    };
    const double base = 1e-6 * (1.0 + std::abs(state.m) + state.sigma);
    if (state.sigma == 0.0) {
        // one-sided derivative at the clamped boundary; the Riesz Dirac cases
        // with a genuine subgradient set were handled above
        out.grad.dm = (value_at(state.m + base, 0.0) - value_at(state.m - base, 0.0)) /
                      (2.0 * base);
        out.grad.dsigma = (value_at(state.m, base) - out.value) / base;
        return out;
    }
    const double h = std::min(base, 0.5 * state.sigma);
    out.grad.dm = (value_at(state.m + h, state.sigma) - value_at(state.m - h, state.sigma)) /
                  (2.0 * h);
    out.grad.dsigma = (value_at(state.m, state.sigma + h) - value_at(state.m, state.sigma - h)) /
                      (2.0 * h);
    return out;
}

std::vector<MSigmaState> msigma_flow(const MSigmaState& initial, const Kernel& kernel,
                                     const QuantileGrid& target, double dt, int steps) {
    if (!(dt > 0.0)) throw std::invalid_argument("msigma_flow: dt must be positive");
    std::vector<MSigmaState> trajectory;
    trajectory.reserve(static_cast<std::size_t>(steps) + 1);
    MSigmaState state = initial;
    trajectory.push_back(state);
    for (int n = 0; n < steps; ++n) {
        const MSigmaEval eval = msigma_value_and_grad(state, kernel, target);
        if (eval.grad.unique) {
            state.m -= dt * eval.grad.dm;
            state.sigma = std::max(0.0, state.sigma - dt * eval.grad.dsigma);
        }
        trajectory.push_back(state);
    }
    return trajectory;
}

DiscreteMeasure double_well_split_eval(double w, double t) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("double_well_split_eval: w in [0,1]");
    if (t < 0.0) throw std::invalid_argument("double_well_split_eval: t must be >= 0");
    const double left = -1.0 + std::exp(-t);
    const double right = 1.0 - std::exp(-t);
    if (w == 0.0) return DiscreteMeasure::dirac({left});
    if (w == 1.0) return DiscreteMeasure::dirac({right});
    return DiscreteMeasure(1, {left, right}, {1.0 - w, w});
}

} // namespace wsflow
