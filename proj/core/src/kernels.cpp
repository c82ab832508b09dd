#include "wsflow/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "wsflow/parallel.hpp"

namespace wsflow {
namespace {

double distance(std::span<const double> x, std::span<const double> y) {
    double sq = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) {
        const double d = x[c] - y[c];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double riesz(double dist, double r) { return -std::pow(dist, r); }

double wendland(double dist) {
    if (dist >= 2.0) return 0.0;
    const double a = 1.0 - 0.5 * dist;
    return a * a * (dist + 1.0);
}

double fold(const std::vector<double>& partials) {
    double total = 0.0;
    for (double p : partials) total += p;
    return total;
}

} // namespace

Kernel Kernel::riesz(double r) {
    if (!(r > 0.0 && r < 2.0)) throw std::invalid_argument("Kernel: Riesz exponent must lie in (0,2)");
    return {Type::Riesz, r};
}

Kernel Kernel::wendland() { return {Type::Wendland, 0.0}; }

double kernel_eval(const Kernel& k, std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("kernel_eval: dimension mismatch");
    if (k.type == Kernel::Type::Wendland) {
        if (x.size() != 1) throw std::invalid_argument("kernel_eval: Wendland kernel is 1D only");
        return wendland(std::abs(x[0] - y[0]));
    }
    return riesz(distance(x, y), k.r);
}

double interaction_energy(const Kernel& k, const DiscreteMeasure& m, unsigned threads) {
    const std::size_t n = m.size();
    std::vector<double> row(n, 0.0);
    parallel_for(n, threads, [&](std::size_t i) {
        const auto xi = m.point(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += m.weight(j) * kernel_eval(k, xi, m.point(j));
        }
        row[i] = m.weight(i) * acc;
    });
    return 0.5 * fold(row);
}

double potential_energy(const Kernel& k, const DiscreteMeasure& m,
                        const DiscreteMeasure& target, unsigned threads) {
    if (m.dim() != target.dim()) throw std::invalid_argument("potential_energy: dimension mismatch");
    std::vector<double> row(m.size(), 0.0);
    parallel_for(m.size(), threads, [&](std::size_t i) {
        const auto xi = m.point(i);
        double v = 0.0;
        for (std::size_t j = 0; j < target.size(); ++j) {
            v -= target.weight(j) * kernel_eval(k, xi, target.point(j));
        }
        row[i] = m.weight(i) * v;
    });
    return fold(row);
}

EnergyReport discrepancy(const Kernel& k, const DiscreteMeasure& m,
                         const DiscreteMeasure& target, unsigned threads) {
    EnergyReport report;
    report.interaction = interaction_energy(k, m, threads);
    report.potential = potential_energy(k, m, target, threads);
    report.target_self_energy = interaction_energy(k, target, threads);
    report.discrepancy = report.interaction + report.potential + report.target_self_energy;
    return report;
}

double discrepancy_1d_quantile(const QuantileGrid& q_mu, const QuantileGrid& q_nu,
                               unsigned threads) {
    if (q_mu.size() != q_nu.size()) {
        throw std::invalid_argument("discrepancy_1d_quantile: grid size mismatch");
    }
    const std::size_t n = q_mu.size();
    std::vector<double> row(n, 0.0);
    parallel_for(n, threads, [&](std::size_t k) {
        const double s = QuantileGrid::node(k, n);
        double cross = 0.0;
        for (std::size_t t = 0; t < n; ++t) cross += std::abs(q_mu[k] - q_nu[t]);
        row[k] = (1.0 - 2.0 * s) * (q_mu[k] + q_nu[k]) + cross / static_cast<double>(n);
    });
    return fold(row) / static_cast<double>(n);
}

std::vector<double> grad_interaction_field(const Kernel& k, const DiscreteMeasure& m,
                                           unsigned threads) {
    if (k.type != Kernel::Type::Riesz) {
        throw std::invalid_argument("grad_interaction_field: Riesz kernel required");
    }
    if (k.r < 1.0) {
        throw std::invalid_argument(
            "grad_interaction_field: no steepest descent direction for r < 1");
    }
    const std::size_t n = m.size();
    const int d = m.dim();
    const double r = k.r;
    std::vector<double> grad(n * static_cast<std::size_t>(d), 0.0);
    parallel_for(n, threads, [&](std::size_t i) {
        const auto xi = m.point(i);
        double* g = grad.data() + i * static_cast<std::size_t>(d);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto xj = m.point(j);
            const double dist = distance(xi, xj);
            if (dist == 0.0) continue;  // coincident pairs contribute 0
            const double factor = -m.weight(j) * r * std::pow(dist, r - 2.0);
            for (int c = 0; c < d; ++c) g[c] += factor * (xi[c] - xj[c]);
        }
    });
    return grad;
}

ParticleObjective particle_objective(int dim, std::span<const double> points,
                                     const DiscreteMeasure& target, double r,
                                     unsigned threads) {
    if (!(r >= 1.0 && r < 2.0)) {
        throw std::invalid_argument("particle_objective: r must lie in [1,2)");
    }
    if (dim != target.dim()) throw std::invalid_argument("particle_objective: dimension mismatch");
    const std::size_t m_count = points.size() / static_cast<std::size_t>(dim);
    const double inv_m = 1.0 / static_cast<double>(m_count);

    ParticleObjective out;
    out.grad.assign(points.size(), 0.0);
    std::vector<double> value_row(m_count, 0.0);

    parallel_for(m_count, threads, [&](std::size_t i) {
        const std::span<const double> xi = points.subspan(i * dim, dim);
        double* g = out.grad.data() + i * static_cast<std::size_t>(dim);
        double repulsion = 0.0;
        for (std::size_t j = 0; j < m_count; ++j) {
            if (j == i) continue;
            const std::span<const double> xj = points.subspan(j * dim, dim);
            const double dist = distance(xi, xj);
            repulsion += std::pow(dist, r);
            if (dist == 0.0) continue;
            const double factor = -inv_m * inv_m * r * std::pow(dist, r - 2.0);
            for (int c = 0; c < dim; ++c) g[c] += factor * (xi[c] - xj[c]);
        }
        double attraction = 0.0;
        for (std::size_t p = 0; p < target.size(); ++p) {
            const auto yp = target.point(p);
            const double dist = distance(xi, yp);
            attraction += target.weight(p) * std::pow(dist, r);
            if (dist == 0.0) continue;
            const double factor = inv_m * target.weight(p) * r * std::pow(dist, r - 2.0);
            for (int c = 0; c < dim; ++c) g[c] += factor * (xi[c] - yp[c]);
        }
        value_row[i] = -0.5 * inv_m * inv_m * repulsion + inv_m * attraction;
    });
    out.value = fold(value_row);
    return out;
}

namespace {

// two-atom witness measures from the line-segment configuration
// x_s(t) = (s, (1-2t) s/2) in R^2
DiscreteMeasure witness_pair(double s, double t) {
    return DiscreteMeasure(2, {0.0, 0.0, s, (1.0 - 2.0 * t) * 0.5 * s}, {0.5, 0.5});
}

} // namespace

double convexity_lambda_bound(double r, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("convexity_lambda_bound: s must be positive");
    const Kernel k = Kernel::riesz(r);
    const double e_mu = interaction_energy(k, witness_pair(s, 0.0));
    const double e_nu = interaction_energy(k, witness_pair(s, 1.0));
    const double e_mid = interaction_energy(k, witness_pair(s, 0.5));
    const double w2_sq = 0.5 * s * s;
    return 8.0 * (0.5 * e_mu + 0.5 * e_nu - e_mid) / w2_sq;
}

bool convexity_violation_witness(double r, double s, double lambda) {
    return lambda > convexity_lambda_bound(r, s);
}

} // namespace wsflow
