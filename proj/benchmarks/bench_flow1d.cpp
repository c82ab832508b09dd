#include <benchmark/benchmark.h>

#include "wsflow/flow1d.hpp"
#include "wsflow/measures.hpp"
#include "wsflow/rng.hpp"

namespace {

void SubgradientStep(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = -1.0 + 2.0 * static_cast<double>(k) / n;
    const wsflow::QuantileGrid q(values);
    const wsflow::QuantileGrid nu(std::vector<double>(n, 0.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wsflow::subgradient_fnu(q, nu));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SubgradientStep)->RangeMultiplier(4)->Range(256, 8192)->Complexity();

void IsotonicProjection(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    wsflow::Rng rng(13);
    std::vector<double> noisy(n);
    for (std::size_t k = 0; k < n; ++k) {
        noisy[k] = static_cast<double>(k) / n + 0.1 * rng.uniform(-1.0, 1.0);
    }
    for (auto _ : state) {
        auto copy = noisy;
        benchmark::DoNotOptimize(wsflow::isotonic_projection(std::move(copy)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(IsotonicProjection)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

} // namespace
