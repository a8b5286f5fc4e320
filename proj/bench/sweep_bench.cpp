// Serial reference sweep against the OpenMP sweep on the classical pair.

#include <benchmark/benchmark.h>

#include "abdg/catalog.hpp"
#include "abdg/conditions.hpp"

using namespace abdg;

namespace {

void condition_report(benchmark::State& state, Execution exec, bool curvature) {
    const SurfacePair pair = make_pair("classical");
    SweepOptions o;
    o.grid = {static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
    o.exec = exec;
    o.curvature = curvature;
    for (auto _ : state) benchmark::DoNotOptimize(backlund_condition_report(pair, o));
    state.counters["threads"] = exec == Execution::Serial ? 1 : sweep_threads();
    state.counters["points"] = benchmark::Counter(o.grid.size() * state.iterations(), benchmark::Counter::kIsRate);
}

void BM_ConditionsSerial(benchmark::State& s) { condition_report(s, Execution::Serial, false); }
void BM_ConditionsParallel(benchmark::State& s) { condition_report(s, Execution::Parallel, false); }
void BM_CurvatureSerial(benchmark::State& s) { condition_report(s, Execution::Serial, true); }
void BM_CurvatureParallel(benchmark::State& s) { condition_report(s, Execution::Parallel, true); }

void BM_GaussWeingarten(benchmark::State& state) {
    const SurfacePair pair = make_pair("classical");
    const auto pts = cell_centres(pair.domain(), {64, 64});
    const Execution exec = state.range(0) ? Execution::Parallel : Execution::Serial;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sweep<double>(pts, [&](ChartPoint p) { return gauss_weingarten(pair.f, pair.xi, p).H; }, exec));
}

} // namespace

BENCHMARK(BM_ConditionsSerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConditionsParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurvatureSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CurvatureParallel)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussWeingarten)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
