#include <benchmark/benchmark.h>

#include <vector>

#include "wormlab/capacity.hpp"
#include "wormlab/support_envelope.hpp"
#include "wormlab/wormcover.hpp"

using namespace wormlab;

static void BM_CapacitySquareDisc(benchmark::State& state) {
  const ConvexBody2 disc = Disc{{0, 0}, 1.0};
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_escape_length(unit_square(), disc, grid).value);
}
BENCHMARK(BM_CapacitySquareDisc)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_CapacityHexagonPolar(benchmark::State& state) {
  const Polygon hex = regular_polygon(6, 1.0);
  const Polygon dual = polar(hex);
  for (auto _ : state) benchmark::DoNotOptimize(min_escape_length(hex, dual, 512).value);
}
BENCHMARK(BM_CapacityHexagonPolar)->Unit(benchmark::kMillisecond);

static void BM_HullAreaExact(benchmark::State& state) {
  const std::vector<ConvexBody2> parts{Disc{{0, 0}, 0.16}, regular_polygon(3, 0.19, 0.3, {0.05, 0.02}),
                                       Polygon({{-0.1, -0.24}, {0.1, -0.24}, {0.1, 0.24}, {-0.1, 0.24}})};
  for (auto _ : state) benchmark::DoNotOptimize(hull_area(parts));
}
BENCHMARK(BM_HullAreaExact);

static void BM_InnerMin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(inner_min(0.5, 0.04, 1e-7).value);
}
BENCHMARK(BM_InnerMin)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
