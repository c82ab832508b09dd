#ifndef WSFLOW_FLOW1D_HPP
#define WSFLOW_FLOW1D_HPP

#include <cstddef>
#include <vector>

#include "wsflow/measures.hpp"

namespace wsflow {

/// Generic 1D flow engine configuration: quantile grid size, Euler step, and
/// step count.  Isotonic projection after every step is always on.
struct Flow1DConfig {
    std::size_t n = 2;
    double dt = 1e-3;
    int steps = 0;
    unsigned threads = 1;
};

/// Exact Euclidean projection onto the cone of nondecreasing vectors
/// (pool-adjacent-violators, uniform weights).
std::vector<double> isotonic_projection(std::vector<double> values);

/// Subgradient selection of the discretized discrepancy functional toward
/// Q_nu: component k is (1 - 2 s_k) + (1/n) sum_t sgn(q_k - Q_nu(t)) with
/// sgn(0) = 0.
std::vector<double> subgradient_fnu(const QuantileGrid& q, const QuantileGrid& q_nu,
                                    unsigned threads = 1);

/// Explicit Euler subgradient descent q <- project(q - dt * subgradient);
/// returns the full trajectory including the initial grid.
std::vector<QuantileGrid> euler_flow(const QuantileGrid& q0, const QuantileGrid& q_nu,
                                     const Flow1DConfig& cfg);

/// Pure interaction flow: Euler steps on the repulsion velocity
/// v_k = (1/n) sum_t sgn(q_k - q_t), with ties between grid entries ordered
/// by index (the quantile order of the underlying particles).
std::vector<QuantileGrid> interaction_flow_1d(const QuantileGrid& q0, const Flow1DConfig& cfg);

} // namespace wsflow

#endif
