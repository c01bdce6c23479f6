// Serial reference scan against the OpenMP scan on the same grid.

#include <benchmark/benchmark.h>

#include "dyonwell/spectrum.hpp"
#include "dyonwell/sweep.hpp"

using namespace dyonwell;

namespace {

const MatchingContext& context() {
    static const MatchingContext ctx({3.0, 5.0, true}, HalfInt(1));
    return ctx;
}

template <bool Parallel>
void BM_Scan(benchmark::State& state) {
    const MatchingContext& ctx = context();
    const SampleFn f = [&ctx](double e) { return ctx.sample(e); };
    const int grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? scan_brackets_parallel(f, {-2.0, 5.0 - 1e-6}, grid)
                          : scan_brackets(f, {-2.0, 5.0 - 1e-6}, grid);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * grid);
}

template <bool Parallel>
void BM_Solve(benchmark::State& state) {
    SolveOptions opts;
    opts.parallel = Parallel;
    for (auto _ : state) {
        auto lv = solve_levels({20.0, 5.0, true}, HalfInt(0), HalfInt(0), HalfInt(0), 3, opts);
        benchmark::DoNotOptimize(lv);
    }
}

void BM_PresetFig2(benchmark::State& state) {
    const SweepSpec spec = preset("fig2");
    for (auto _ : state) {
        auto t = run_sweep(spec);
        benchmark::DoNotOptimize(t);
    }
}

}  // namespace

BENCHMARK(BM_Scan<false>)->Name("scan/serial")->Arg(512)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan<true>)->Name("scan/parallel")->Arg(512)->Arg(2048)->Arg(8192)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Solve<false>)->Name("solve/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve<true>)->Name("solve/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PresetFig2)->Name("sweep/fig2")->Unit(benchmark::kSecond)->UseRealTime()->Iterations(1);

BENCHMARK_MAIN();
