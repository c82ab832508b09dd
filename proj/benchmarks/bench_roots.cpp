#include <benchmark/benchmark.h>

#include "wsflow/mms.hpp"

namespace {

void NextTimeSolve(benchmark::State& state) {
    const double r = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) {
        double s = 0.0;
        for (int n = 0; n < 64; ++n) s = wsflow::solve_next_time(s, 0.05, r);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(NextTimeSolve)->Arg(50)->Arg(125)->Arg(150)->Arg(175);

} // namespace
