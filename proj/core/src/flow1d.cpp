#include "wsflow/flow1d.hpp"

#include <cmath>
#include <stdexcept>

#include "wsflow/parallel.hpp"

namespace wsflow {

std::vector<double> isotonic_projection(std::vector<double> values) {
    const std::size_t n = values.size();
    std::vector<double> block_mean(n);
    std::vector<std::size_t> block_len(n);
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < n; ++i) {
        block_mean[blocks] = values[i];
        block_len[blocks] = 1;
        ++blocks;
        while (blocks >= 2 && block_mean[blocks - 2] > block_mean[blocks - 1]) {
            const double total = block_mean[blocks - 2] * block_len[blocks - 2] +
                                 block_mean[blocks - 1] * block_len[blocks - 1];
            block_len[blocks - 2] += block_len[blocks - 1];
            block_mean[blocks - 2] = total / static_cast<double>(block_len[blocks - 2]);
            --blocks;
        }
    }
    std::size_t out = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t j = 0; j < block_len[b]; ++j) values[out++] = block_mean[b];
    }
    return values;
}

std::vector<double> subgradient_fnu(const QuantileGrid& q, const QuantileGrid& q_nu,
                                    unsigned threads) {
    if (q.size() != q_nu.size()) throw std::invalid_argument("subgradient_fnu: grid size mismatch");
    const std::size_t n = q.size();
    std::vector<double> grad(n);
    parallel_for(n, threads, [&](std::size_t k) {
        double sign_sum = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double diff = q[k] - q_nu[t];
            if (diff > 0.0) sign_sum += 1.0;
            else if (diff < 0.0) sign_sum -= 1.0;
        }
        grad[k] = (1.0 - 2.0 * QuantileGrid::node(k, n)) + sign_sum / static_cast<double>(n);
    });
    return grad;
}

std::vector<QuantileGrid> euler_flow(const QuantileGrid& q0, const QuantileGrid& q_nu,
                                     const Flow1DConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("euler_flow: dt must be positive");
    std::vector<QuantileGrid> trajectory;
    trajectory.reserve(static_cast<std::size_t>(cfg.steps) + 1);
    trajectory.push_back(q0);
    std::vector<double> current = q0.values();
    for (int step = 0; step < cfg.steps; ++step) {
        const std::vector<double> grad =
            subgradient_fnu(trajectory.back(), q_nu, cfg.threads);
        for (std::size_t k = 0; k < current.size(); ++k) current[k] -= cfg.dt * grad[k];
        current = isotonic_projection(std::move(current));
        trajectory.emplace_back(current);
    }
    return trajectory;
}

std::vector<QuantileGrid> interaction_flow_1d(const QuantileGrid& q0, const Flow1DConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("interaction_flow_1d: dt must be positive");
    const std::size_t n = q0.size();
    std::vector<QuantileGrid> trajectory;
    trajectory.reserve(static_cast<std::size_t>(cfg.steps) + 1);
    trajectory.push_back(q0);
    std::vector<double> current = q0.values();
    std::vector<double> velocity(n);
    for (int step = 0; step < cfg.steps; ++step) {
        parallel_for(n, cfg.threads, [&](std::size_t k) {
            double sign_sum = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                const double diff = current[k] - current[t];
                if (diff > 0.0) sign_sum += 1.0;
                else if (diff < 0.0) sign_sum -= 1.0;
                else if (k > t) sign_sum += 1.0;   // index order breaks exact ties
                else if (k < t) sign_sum -= 1.0;
            }
            velocity[k] = sign_sum / static_cast<double>(n);
        });
        for (std::size_t k = 0; k < n; ++k) current[k] += cfg.dt * velocity[k];
        current = isotonic_projection(std::move(current));
        trajectory.emplace_back(current);
    }
    return trajectory;
}

} // namespace wsflow
