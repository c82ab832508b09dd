#ifndef WSFLOW_PARTICLES_HPP
#define WSFLOW_PARTICLES_HPP

#include <cstdint>
#include <vector>

#include "wsflow/kernels.hpp"
#include "wsflow/measures.hpp"

namespace wsflow {

/// Euler-forward particle descent of the discrepancy toward an atomic target
/// for the Riesz kernel with r in [1,2).  Step schedule: the n-th step (from
/// state index n) uses tau_n = min((n+1) tau0, tau_max), ramping up from the
/// base step tau0.
struct SimConfig {
    SimConfig(std::size_t m, int dim, double r, DiscreteMeasure target);

    std::size_t m_count;
    int dim;
    double r;
    DiscreteMeasure target;
    double tau0;       // defaults to 1/(10 M)
    double tau_max;    // defaults to 10/M
    std::vector<double> init_center;
    double init_halfwidth = 1e-9;
    std::uint64_t seed = 0;
    int steps = 0;
    unsigned threads = 1;
};

struct ParticleState {
    std::vector<double> positions;  // flat M x dim
    std::size_t step_index = 0;
    double model_time = 0.0;        // sum of the step sizes taken so far
    double step_allowance = 0.0;    // Euler overshoot budget 2 tau |M grad F|^2 of the last step
};

/// M points uniform in the cube center +- halfwidth, deterministically seeded.
ParticleState init_near_dirac(const SimConfig& cfg);

/// Warm start realizing the known steepest-descent direction at the Dirac: a
/// tiny-radius sample of the direction measure (-E Id - grad V(center))_# eta*
/// for r = 1; for r in (1,2) the direction is the single point -grad V(center)
/// plus cube jitter at a fraction of the radius.
ParticleState init_direction_warm_start(const SimConfig& cfg);

/// One Euler step x <- x - tau_n M grad F_M(x).
ParticleState euler_step(const ParticleState& state, const SimConfig& cfg);

struct EnergyTraceRow {
    int step = 0;
    double model_time = 0.0;
    double discrepancy = 0.0;
    // accumulated Euler overshoot allowance since the previous trace row; the
    // discrepancy may rise by at most this much between rows
    double allowance = 0.0;
};

struct RunLog {
    std::vector<std::pair<int, std::vector<double>>> snapshots;  // (step, positions)
    std::vector<double> snapshot_times;
    std::vector<EnergyTraceRow> energy;
    ParticleState final_state{};
};

/// Runs cfg.steps Euler steps, recording positions and the discrepancy trace
/// every snapshot_every steps (plus the initial and final states).
RunLog run(const SimConfig& cfg, int snapshot_every = 1, bool warm_start = false);

/// The given quantile of |x_i - center| over the cloud.
double support_radius(const std::vector<double>& positions, int dim,
                      const std::vector<double>& center, double quantile = 0.99);

} // namespace wsflow

#endif
