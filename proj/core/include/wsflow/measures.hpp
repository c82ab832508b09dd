#ifndef WSFLOW_MEASURES_HPP
#define WSFLOW_MEASURES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wsflow {

/// Weighted point cloud in R^d representing an atomic probability measure.
/// Immutable after construction; weights must sum to 1 within 1e-12.
class DiscreteMeasure {
public:
    DiscreteMeasure(int dim, std::vector<double> coords, std::vector<double> weights);

    static DiscreteMeasure dirac(std::vector<double> point);
    /// Equal-weight cloud from flat coordinates (size = M * dim).
    static DiscreteMeasure uniform_cloud(int dim, std::vector<double> coords);

    int dim() const { return dim_; }
    std::size_t size() const { return weights_.size(); }
    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<double>& weights() const { return weights_; }

    bool has_uniform_weights(double tol = 1e-12) const;

private:
    int dim_;
    std::vector<double> coords_;
    std::vector<double> weights_;
};

/// Nondecreasing sample of a quantile function at the midpoints
/// s_k = (k - 1/2)/n of (0,1); the 1D measure representation.
class QuantileGrid {
public:
    explicit QuantileGrid(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    const std::vector<double>& values() const { return values_; }

    /// Midpoint node s_k = (k + 1/2)/n for 0-based k.
    static double node(std::size_t k, std::size_t n) {
        return (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    }
    double node(std::size_t k) const { return node(k, values_.size()); }

private:
    std::vector<double> values_;
};

/// Tagged equilibrium-measure variant: uniform interval, beta-ball density
/// A_s (s^2 - |x|^2)^(1-(r+d)/2) on s B^d, or uniform sphere.  All variants
/// are centered, so their mean vanishes.
enum class EquilibriumKind { UniformInterval, BetaBall, UniformSphere };

struct EquilibriumMeasure {
    EquilibriumKind kind;
    int dim;
    double riesz_r;  // density exponent parameter; unused for UniformSphere
    double scale;    // halfwidth, ball radius, or sphere radius

    static EquilibriumMeasure uniform_interval(double halfwidth);
    static EquilibriumMeasure beta_ball(int d, double r, double s);
    static EquilibriumMeasure uniform_sphere(int d, double radius);

    /// Closed-form second moment: s^2/3, s^2 d/(4-r), R^2 respectively.
    double second_moment() const;

    bool same_family(const EquilibriumMeasure& other, double tol = 0.0) const;
};

/// A point (alpha Id + shift)_# eta of the scaling/translation family over an
/// equilibrium measure; the exact representation of explosion flows.
struct ScalingFamilyPoint {
    EquilibriumMeasure base;
    double scale = 0.0;                // alpha >= 0
    std::vector<double> shift;         // dim-vector; empty means origin
};

// --- operations ------------------------------------------------------------

/// Left-continuous generalized inverse CDF of a 1D atomic measure sampled at
/// the n midpoint nodes; ties resolve to the smallest admissible atom.
QuantileGrid quantile_of_atomic(const DiscreteMeasure& m, std::size_t n);

/// (a Id + b)_# in quantile space; requires a >= 0 to preserve monotonicity.
QuantileGrid pushforward_affine(const QuantileGrid& q, double a, double b);

double second_moment(const DiscreteMeasure& m);
double second_moment(const QuantileGrid& q);
double second_moment(const ScalingFamilyPoint& p);

std::vector<double> mean(const DiscreteMeasure& m);

/// W2 by the quantile embedding: sqrt((1/n) sum (a_k - b_k)^2).
double w2_1d(const QuantileGrid& a, const QuantileGrid& b);

/// Exact W2 between equal-size uniform-weight clouds by optimal assignment
/// (cubic-time Hungarian method).  Test oracle; capped at M <= 512.
double w2_assignment(const DiscreteMeasure& a, const DiscreteMeasure& b);

/// W2 along the scaling family: |alpha_p - alpha_q| sqrt(m2(base)); the curve
/// t -> (t Id)_# eta is a constant-speed geodesic.
double w2_scaling_family(const ScalingFamilyPoint& p, const ScalingFamilyPoint& q);

/// n i.i.d. samples from an equilibrium measure.  Uniform spheres come from
/// normalized Gaussian vectors; the d=1 interval and the d=2 arcsine ball are
/// coordinate projections of uniform samples on the 2-sphere, rescaled to the
/// base's support.  Deterministic per seed.
DiscreteMeasure sample(const EquilibriumMeasure& base, std::size_t count, std::uint64_t seed);

} // namespace wsflow

#endif
