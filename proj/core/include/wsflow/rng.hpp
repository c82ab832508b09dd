#ifndef WSFLOW_RNG_HPP
#define WSFLOW_RNG_HPP

#include <cstdint>

namespace wsflow {

/// Seedable 64-bit shift/multiply generator (splitmix64 update function).
/// Update constants: increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9
/// and 0x94D049BB133111EB.  One stream per seed; no shared state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0,1); never returns 0 so it is safe under log().
    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; second deviate is cached.
    double normal();

    /// Gamma(shape, 1) via Marsaglia-Tsang, boosted for shape < 1.
    double gamma(double shape);

    /// Beta(a, b) from two gamma draws.
    double beta(double a, double b);

private:
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

} // namespace wsflow

#endif
