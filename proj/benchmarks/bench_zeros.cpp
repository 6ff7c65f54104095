#include <benchmark/benchmark.h>

#include "zstr/zeros.hpp"

namespace {

void BM_ScanZeros(benchmark::State& state) {
    zstr::ScanConfig config;
    config.t_min = 14;
    config.t_max = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zstr::scan_zeros(config));
}
BENCHMARK(BM_ScanZeros)->Arg(68)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RefineZero(benchmark::State& state) {
    zstr::ScanConfig config;
    config.t_min = 10;
    config.t_max = 30;
    for (auto _ : state) benchmark::DoNotOptimize(zstr::refine_zero(14.0, 14.3, 0.5, config));
}
BENCHMARK(BM_RefineZero);

}  // namespace
