#include "wsflow/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wsflow/rng.hpp"

namespace wsflow {

DiscreteMeasure::DiscreteMeasure(int dim, std::vector<double> coords,
                                 std::vector<double> weights)
    : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {
    if (dim_ < 1) throw std::invalid_argument("DiscreteMeasure: dim must be >= 1");
    if (coords_.size() != weights_.size() * static_cast<std::size_t>(dim_)) {
        throw std::invalid_argument("DiscreteMeasure: points/weights size mismatch");
    }
    // compensated summation: plain accumulation drifts past the 1e-12 gate
    // around 1e5 atoms
    double total = 0.0;
    double carry = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) throw std::invalid_argument("DiscreteMeasure: negative weight");
        const double y = w - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
    // the empty cloud is allowed as a degenerate value (e.g. zero-dot exports)
    if (!weights_.empty() && std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("DiscreteMeasure: weights must sum to 1");
    }
}

DiscreteMeasure DiscreteMeasure::dirac(std::vector<double> point) {
    const int d = static_cast<int>(point.size());
    return DiscreteMeasure(d, std::move(point), {1.0});
}

DiscreteMeasure DiscreteMeasure::uniform_cloud(int dim, std::vector<double> coords) {
    const std::size_t m = coords.size() / static_cast<std::size_t>(dim);
    std::vector<double> weights(m, 1.0 / static_cast<double>(m));
    return DiscreteMeasure(dim, std::move(coords), std::move(weights));
}

bool DiscreteMeasure::has_uniform_weights(double tol) const {
    const double w0 = 1.0 / static_cast<double>(size());
    return std::all_of(weights_.begin(), weights_.end(),
                       [&](double w) { return std::abs(w - w0) <= tol; });
}

QuantileGrid::QuantileGrid(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("QuantileGrid: empty grid");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw std::invalid_argument("QuantileGrid: non-finite entry");
        }
        if (k > 0 && values_[k] < values_[k - 1]) {
            throw std::invalid_argument("QuantileGrid: values must be nondecreasing");
        }
    }
}

EquilibriumMeasure EquilibriumMeasure::uniform_interval(double halfwidth) {
    return {EquilibriumKind::UniformInterval, 1, 1.0, halfwidth};
}

EquilibriumMeasure EquilibriumMeasure::beta_ball(int d, double r, double s) {
    if (d + r >= 4.0) throw std::invalid_argument("beta_ball: requires d + r < 4");
    return {EquilibriumKind::BetaBall, d, r, s};
}

EquilibriumMeasure EquilibriumMeasure::uniform_sphere(int d, double radius) {
    return {EquilibriumKind::UniformSphere, d, 0.0, radius};
}

double EquilibriumMeasure::second_moment() const {
    switch (kind) {
        case EquilibriumKind::UniformInterval:
            return scale * scale / 3.0;
        case EquilibriumKind::BetaBall:
            // E|X|^2 = s^2 E[W], W ~ Beta(d/2, 2-(d+r)/2)
            return scale * scale * static_cast<double>(dim) / (4.0 - riesz_r);
        case EquilibriumKind::UniformSphere:
            return scale * scale;
    }
    return 0.0;
}

bool EquilibriumMeasure::same_family(const EquilibriumMeasure& other, double tol) const {
    return kind == other.kind && dim == other.dim &&
           std::abs(riesz_r - other.riesz_r) <= tol &&
           std::abs(scale - other.scale) <= tol;
}

QuantileGrid quantile_of_atomic(const DiscreteMeasure& m, std::size_t n) {
    if (m.dim() != 1) throw std::invalid_argument("quantile_of_atomic: dim must be 1");
    if (n == 0) throw std::invalid_argument("quantile_of_atomic: n must be positive");

    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return m.coords()[a] < m.coords()[b];
    });

    std::vector<double> values(n);
    std::size_t atom = 0;
    double cdf = m.weight(order[0]);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = QuantileGrid::node(k, n);
        while (cdf < s && atom + 1 < m.size()) {
            ++atom;
            cdf += m.weight(order[atom]);
        }
        values[k] = m.coords()[order[atom]];
    }
    return QuantileGrid(std::move(values));
}

QuantileGrid pushforward_affine(const QuantileGrid& q, double a, double b) {
    if (a < 0.0) throw std::invalid_argument("pushforward_affine: a must be >= 0");
    std::vector<double> values(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) values[k] = a * q[k] + b;
    return QuantileGrid(std::move(values));
}

double second_moment(const DiscreteMeasure& m) {
    double total = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        double sq = 0.0;
        for (double c : m.point(i)) sq += c * c;
        total += m.weight(i) * sq;
    }
    return total;
}

double second_moment(const QuantileGrid& q) {
    double total = 0.0;
    for (double v : q.values()) total += v * v;
    return total / static_cast<double>(q.size());
}

double second_moment(const ScalingFamilyPoint& p) {
    // mean(base) = 0 for every built-in equilibrium measure
    double shift_sq = 0.0;
    for (double c : p.shift) shift_sq += c * c;
    return p.scale * p.scale * p.base.second_moment() + shift_sq;
}

std::vector<double> mean(const DiscreteMeasure& m) {
    std::vector<double> mu(static_cast<std::size_t>(m.dim()), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto x = m.point(i);
        for (int c = 0; c < m.dim(); ++c) mu[c] += m.weight(i) * x[c];
    }
    return mu;
}

double w2_1d(const QuantileGrid& a, const QuantileGrid& b) {
    if (a.size() != b.size()) throw std::invalid_argument("w2_1d: grid size mismatch");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

double w2_scaling_family(const ScalingFamilyPoint& p, const ScalingFamilyPoint& q) {
    if (!p.base.same_family(q.base) || p.shift != q.shift) {
        throw std::invalid_argument("w2_scaling_family: base/shift mismatch");
    }
    return std::abs(p.scale - q.scale) * std::sqrt(p.base.second_moment());
}

namespace {

void sphere_point(Rng& rng, int d, double radius, double* out) {
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (int c = 0; c < d; ++c) {
            out[c] = rng.normal();
            norm_sq += out[c] * out[c];
        }
    } while (norm_sq == 0.0);
    const double scale = radius / std::sqrt(norm_sq);
    for (int c = 0; c < d; ++c) out[c] *= scale;
}

} // namespace

DiscreteMeasure sample(const EquilibriumMeasure& base, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    const int d = base.dim;
    std::vector<double> coords(count * static_cast<std::size_t>(d));
    double s3[3];

    for (std::size_t i = 0; i < count; ++i) {
        double* out = coords.data() + i * static_cast<std::size_t>(d);
        switch (base.kind) {
            case EquilibriumKind::UniformSphere:
                sphere_point(rng, d, base.scale, out);
                break;
            case EquilibriumKind::UniformInterval:
                // Archimedes: first coordinate of a uniform 2-sphere point is U[-1,1]
                sphere_point(rng, 3, 1.0, s3);
                out[0] = base.scale * s3[0];
                break;
            case EquilibriumKind::BetaBall:
                if (d == 2 && base.riesz_r == 1.0) {
                    // arcsine ball = projection of the uniform 2-sphere
                    sphere_point(rng, 3, 1.0, s3);
                    out[0] = base.scale * s3[0];
                    out[1] = base.scale * s3[1];
                } else {
                    // radial law |X| = s sqrt(W), W ~ Beta(d/2, 2-(d+r)/2)
                    const double w = rng.beta(0.5 * d, 2.0 - 0.5 * (d + base.riesz_r));
                    sphere_point(rng, d, base.scale * std::sqrt(w), out);
                }
                break;
        }
    }
    return DiscreteMeasure::uniform_cloud(d, std::move(coords));
}

} // namespace wsflow
