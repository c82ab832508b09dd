#ifndef WSFLOW_PARALLEL_HPP
#define WSFLOW_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace wsflow {

/// Runs fn(i) for i in [0,n).  Work is split into contiguous blocks, one per
/// worker; each index writes only its own output slot, so results are
/// bit-identical for any thread count.  threads == 0 picks the hardware count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || n < 2 * threads) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace wsflow

#endif
