#include <benchmark/benchmark.h>

#include "wsflow/kernels.hpp"
#include "wsflow/measures.hpp"
#include "wsflow/rng.hpp"

namespace {

wsflow::DiscreteMeasure random_cloud(int dim, std::size_t m, std::uint64_t seed) {
    wsflow::Rng rng(seed);
    std::vector<double> coords(m * static_cast<std::size_t>(dim));
    for (double& c : coords) c = rng.uniform(-1.0, 1.0);
    return wsflow::DiscreteMeasure::uniform_cloud(dim, std::move(coords));
}

void InteractionEnergy(benchmark::State& state) {
    const auto cloud = random_cloud(2, static_cast<std::size_t>(state.range(0)), 7);
    const auto kernel = wsflow::Kernel::riesz(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wsflow::interaction_energy(kernel, cloud));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(InteractionEnergy)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void ParticleGradient(benchmark::State& state) {
    const auto cloud = random_cloud(2, static_cast<std::size_t>(state.range(0)), 11);
    const auto target = wsflow::DiscreteMeasure::dirac({1.0, 0.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            wsflow::particle_objective(2, cloud.coords(), target, 1.0));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ParticleGradient)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void AssignmentW2(benchmark::State& state) {
    const auto a = random_cloud(2, static_cast<std::size_t>(state.range(0)), 3);
    const auto b = random_cloud(2, static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wsflow::w2_assignment(a, b));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(AssignmentW2)->RangeMultiplier(2)->Range(16, 256)->Complexity();

} // namespace

BENCHMARK_MAIN();
