#include "auxzeta/sweep.hpp"

#include <benchmark/benchmark.h>

#include <thread>

using namespace auxzeta;

namespace {

const LemmaConstants &lemma() {
    static const LemmaConstants k = compute_lemma_constants();
    return k;
}

void BM_SweepSerial(benchmark::State &state) {
    const QuadratureConfig cfg;
    const int n_end = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_serial(1, n_end, cfg, lemma()));
    state.SetItemsProcessed(state.iterations() * n_end);
}

void BM_SweepParallel(benchmark::State &state) {
    const QuadratureConfig cfg;
    const int n_end = static_cast<int>(state.range(0));
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_parallel(1, n_end, cfg, lemma(), workers));
    state.SetItemsProcessed(state.iterations() * n_end);
}

void parallel_args(benchmark::internal::Benchmark *b) {
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    for (int n_end : {200, 2000})
        for (int w = 1; w <= hw; w *= 2)
            b->Args({n_end, w});
}

} // namespace

BENCHMARK(BM_SweepSerial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
