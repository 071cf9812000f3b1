#include <benchmark/benchmark.h>

#include "prefund/opalg.hpp"

using namespace prefund;

namespace {

void run_sweep(benchmark::State& state, SweepMode mode) {
    const AffineType t{Family::A, static_cast<int>(state.range(0)), 1};
    LatticeModule m(t);
    SweepOptions opt;
    opt.extra_random = 0;
    opt.mode = mode;
    const auto suite = relation_suite(m.rs());
    const RootVec box(t.n, static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto reports = check_relations(suite, m, box, opt);
        benchmark::DoNotOptimize(reports);
    }
}

void BM_SweepSerial(benchmark::State& s) { run_sweep(s, SweepMode::Serial); }
void BM_SweepParallel(benchmark::State& s) { run_sweep(s, SweepMode::Parallel); }

}  // namespace

BENCHMARK(BM_SweepSerial)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
