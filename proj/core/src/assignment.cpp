#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wsflow/measures.hpp"

namespace wsflow {

// Exact linear assignment (Hungarian method with potentials, O(M^3)).
// This is a test oracle for W2 on equal-size uniform clouds, not a
// production solver; M is capped accordingly.
double w2_assignment(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("w2_assignment: clouds must have equal size");
    }
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("w2_assignment: dimension mismatch");
    }
    if (!a.has_uniform_weights() || !b.has_uniform_weights()) {
        throw std::invalid_argument("w2_assignment: weights must be uniform");
    }
    const std::size_t n = a.size();
    if (n > 512) throw std::invalid_argument("w2_assignment: M capped at 512");

    std::vector<double> cost(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = a.point(i);
        for (std::size_t j = 0; j < n; ++j) {
            const auto y = b.point(j);
            double sq = 0.0;
            for (int c = 0; c < a.dim(); ++c) {
                const double d = x[c] - y[c];
                sq += d * d;
            }
            cost[i * n + j] = sq;
        }
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> min_col(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < min_col[j]) {
                    min_col[j] = cur;
                    way[j] = j0;
                }
                if (min_col[j] < delta) {
                    delta = min_col[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_col[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    double total = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        total += cost[(match[j] - 1) * n + (j - 1)];
    }
    return std::sqrt(total / static_cast<double>(n));
}

} // namespace wsflow
