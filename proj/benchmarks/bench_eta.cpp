#include <benchmark/benchmark.h>

#include "zstr/eta.hpp"

namespace {

void BM_EtaAccelerated(benchmark::State& state) {
    const zstr::EtaArgument s(0.5, static_cast<double>(state.range(0)));
    const double p = static_cast<double>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(zstr::eta_accelerated(s, p));
    state.counters["terms"] = static_cast<double>(zstr::accelerated_length(s, p));
}
BENCHMARK(BM_EtaAccelerated)->ArgsProduct({{14, 120, 360, 1000}, {6, 12}});

// n = 2 * 10^(3/sigma): 12 terms at sigma = 4, 200 at 1.5, 2e6 at 0.5.
void BM_EtaTruncated(benchmark::State& state) {
    const double sigma = static_cast<double>(state.range(0)) / 10.0;
    const zstr::EtaArgument s(sigma, 111.0295);
    const auto plan = zstr::truncation_length(sigma, 3);
    for (auto _ : state) benchmark::DoNotOptimize(zstr::eta_truncated(s, plan));
    state.counters["terms"] = static_cast<double>(plan.n_terms);
}
BENCHMARK(BM_EtaTruncated)->Arg(40)->Arg(15)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_EtaTermPhase(benchmark::State& state) {
    const bool compensated = state.range(0) != 0;
    const zstr::EtaArgument s(0.5, 2.67653395649e11);
    std::int64_t n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zstr::eta_term(n, s, compensated));
        n = n == 100000 ? 2 : n + 1;
    }
}
BENCHMARK(BM_EtaTermPhase)->Arg(0)->Arg(1);

}  // namespace
