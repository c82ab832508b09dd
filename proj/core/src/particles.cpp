#include "wsflow/particles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsflow/equilibrium.hpp"
#include "wsflow/rng.hpp"

namespace wsflow {

SimConfig::SimConfig(std::size_t m, int dim_, double r_, DiscreteMeasure target_)
    : m_count(m),
      dim(dim_),
      r(r_),
      target(std::move(target_)),
      tau0(1.0 / (10.0 * static_cast<double>(m))),
      tau_max(10.0 / static_cast<double>(m)),
      init_center(static_cast<std::size_t>(dim_), 0.0) {
    if (m_count < 1) throw std::invalid_argument("SimConfig: M must be >= 1");
    if (!(r >= 1.0 && r < 2.0)) throw std::invalid_argument("SimConfig: r must lie in [1,2)");
    if (target.dim() != dim) throw std::invalid_argument("SimConfig: target dimension mismatch");
}

ParticleState init_near_dirac(const SimConfig& cfg) {
    Rng rng(cfg.seed);
    ParticleState state;
    state.positions.resize(cfg.m_count * static_cast<std::size_t>(cfg.dim));
    for (std::size_t i = 0; i < cfg.m_count; ++i) {
        for (int c = 0; c < cfg.dim; ++c) {
            state.positions[i * cfg.dim + c] =
                cfg.init_center[c] + cfg.init_halfwidth * (2.0 * rng.uniform() - 1.0);
        }
    }
    return state;
}

ParticleState init_direction_warm_start(const SimConfig& cfg) {
    // -grad V_{K,nu}(center): attraction velocity of a single particle at the center
    std::vector<double> drift(static_cast<std::size_t>(cfg.dim), 0.0);
    for (std::size_t p = 0; p < cfg.target.size(); ++p) {
        const auto y = cfg.target.point(p);
        double sq = 0.0;
        for (int c = 0; c < cfg.dim; ++c) {
            const double diff = cfg.init_center[c] - y[c];
            sq += diff * diff;
        }
        const double dist = std::sqrt(sq);
        if (dist == 0.0) continue;
        const double factor = cfg.target.weight(p) * cfg.r * std::pow(dist, cfg.r - 2.0);
        for (int c = 0; c < cfg.dim; ++c) {
            drift[c] -= factor * (cfg.init_center[c] - y[c]);
        }
    }

    ParticleState state;
    state.positions.resize(cfg.m_count * static_cast<std::size_t>(cfg.dim));
    const double radius = cfg.init_halfwidth;
    if (cfg.r == 1.0) {
        const EquilibriumSolution sol = equilibrium_unit(cfg.dim, cfg.r);
        const DiscreteMeasure cloud = sample(sol.eta_star, cfg.m_count, cfg.seed);
        for (std::size_t i = 0; i < cfg.m_count; ++i) {
            const auto y = cloud.point(i);
            for (int c = 0; c < cfg.dim; ++c) {
                state.positions[i * cfg.dim + c] =
                    cfg.init_center[c] + radius * (-sol.energy * y[c] + drift[c]);
            }
        }
        return state;
    }
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.m_count; ++i) {
        for (int c = 0; c < cfg.dim; ++c) {
            state.positions[i * cfg.dim + c] =
                cfg.init_center[c] + radius * drift[c] +
                1e-3 * radius * (2.0 * rng.uniform() - 1.0);
        }
    }
    return state;
}

ParticleState euler_step(const ParticleState& state, const SimConfig& cfg) {
    const double tau = std::min(static_cast<double>(state.step_index + 1) * cfg.tau0,
                                cfg.tau_max);
    const ParticleObjective obj =
        particle_objective(cfg.dim, state.positions, cfg.target, cfg.r, cfg.threads);
    ParticleState next;
    next.positions.resize(state.positions.size());
    const double scale = tau * static_cast<double>(cfg.m_count);
    double grad_sq = 0.0;
    for (std::size_t i = 0; i < state.positions.size(); ++i) {
        next.positions[i] = state.positions[i] - scale * obj.grad[i];
        const double g = static_cast<double>(cfg.m_count) * obj.grad[i];
        grad_sq += g * g;
    }
    next.step_index = state.step_index + 1;
    next.model_time = state.model_time + tau;
    next.step_allowance = 2.0 * tau * grad_sq;
    return next;
}

RunLog run(const SimConfig& cfg, int snapshot_every, bool warm_start) {
    if (snapshot_every < 1) snapshot_every = 1;
    const Kernel kernel = Kernel::riesz(cfg.r);
    RunLog log;
    ParticleState state = warm_start ? init_direction_warm_start(cfg) : init_near_dirac(cfg);

    // the target self-energy term is constant along the run
    const double target_energy = interaction_energy(kernel, cfg.target, cfg.threads);
    double pending_allowance = 0.0;
    auto record = [&](const ParticleState& s) {
        log.snapshots.emplace_back(static_cast<int>(s.step_index), s.positions);
        log.snapshot_times.push_back(s.model_time);
        const auto cloud = DiscreteMeasure::uniform_cloud(cfg.dim, s.positions);
        const double value = interaction_energy(kernel, cloud, cfg.threads) +
                             potential_energy(kernel, cloud, cfg.target, cfg.threads) +
                             target_energy;
        log.energy.push_back(
            {static_cast<int>(s.step_index), s.model_time, value, pending_allowance});
        pending_allowance = 0.0;
    };

    record(state);
    for (int n = 0; n < cfg.steps; ++n) {
        state = euler_step(state, cfg);
        pending_allowance += state.step_allowance;
        if (static_cast<int>(state.step_index) % snapshot_every == 0 || n + 1 == cfg.steps) {
            record(state);
        }
    }
    log.final_state = std::move(state);
    return log;
}

double support_radius(const std::vector<double>& positions, int dim,
                      const std::vector<double>& center, double quantile) {
    const std::size_t m = positions.size() / static_cast<std::size_t>(dim);
    if (m == 0) throw std::invalid_argument("support_radius: empty cloud");
    std::vector<double> dist(m);
    for (std::size_t i = 0; i < m; ++i) {
        double sq = 0.0;
        for (int c = 0; c < dim; ++c) {
            const double diff = positions[i * dim + c] - center[c];
            sq += diff * diff;
        }
        dist[i] = std::sqrt(sq);
    }
    std::sort(dist.begin(), dist.end());
    // left-continuous generalized inverse of the empirical CDF
    const double pos = quantile * static_cast<double>(m);
    std::size_t idx = static_cast<std::size_t>(std::ceil(pos - 1e-12));
    if (idx > 0) --idx;
    idx = std::min(idx, m - 1);
    return dist[idx];
}

} // namespace wsflow
