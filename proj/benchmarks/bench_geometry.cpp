#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zstr/geometry.hpp"

namespace {

std::vector<zstr::ComplexValue> random_walk(std::size_t n) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<zstr::ComplexValue> pts(n);
    for (std::size_t i = 1; i < n; ++i) pts[i] = pts[i - 1] + zstr::ComplexValue(step(rng), step(rng));
    return pts;
}

void BM_SelfCrossingsSweep(benchmark::State& state) {
    const auto pts = random_walk(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zstr::polyline_self_crossings(pts));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelfCrossingsSweep)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_ClassifyLines(benchmark::State& state) {
    std::vector<zstr::FittedLine> lines;
    for (int k = 0; k < state.range(0); ++k) {
        const double a = 0.3 * k;
        lines.push_back({std::polar(2.0, a), std::polar(1.0, a), 1.0, 0.0});
    }
    for (auto _ : state) benchmark::DoNotOptimize(zstr::classify_lines(lines));
}
BENCHMARK(BM_ClassifyLines)->Arg(10)->Arg(1000);

}  // namespace
