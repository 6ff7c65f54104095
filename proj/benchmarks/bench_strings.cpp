#include <benchmark/benchmark.h>

#include "zstr/strings.hpp"

namespace {

void BM_BuildFamily(benchmark::State& state) {
    const zstr::SigmaGrid grid(0.4, 1.5, 0.01);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zstr::build_family(111.0295, 111.8746, 0.0939, grid));
    }
    state.SetItemsProcessed(state.iterations() * 10 * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_BuildFamily)->Unit(benchmark::kMillisecond);

void BM_BuildFamilyFixedTerms(benchmark::State& state) {
    const zstr::SigmaGrid grid(1.5, 4, 0.01);
    const zstr::TruncationPlan plan{state.range(0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(zstr::build_family_truncated(111.0295, 111.8746, 0.0939, grid, plan));
    }
}
BENCHMARK(BM_BuildFamilyFixedTerms)->Arg(12)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
