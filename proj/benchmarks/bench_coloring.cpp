#include <benchmark/benchmark.h>

#include <vector>

#include "hexalloc/coloring.hpp"
#include "hexalloc/dynamic_alloc.hpp"
#include "hexalloc/graph.hpp"
#include "hexalloc/lattice.hpp"

namespace {

using namespace hexalloc;

void BM_FixtureChromatic(benchmark::State& state) {
  const auto lattice = Lattice::from_cells(twelve_cell_fixture(), 1.0);
  const auto g = build_interference_graph(lattice, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_coloring(g).num_colors);
}
BENCHMARK(BM_FixtureChromatic)->Arg(kDataMetricThreshold)->Arg(kControlMetricThreshold);

void BM_LatticeChromatic(benchmark::State& state) {
  const auto lattice = Lattice::build(static_cast<int>(state.range(0)), 1.0);
  const auto g = build_interference_graph(lattice, kDataMetricThreshold);
  SolverOptions options;
  options.max_vertices = 512;
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_coloring(g, options).num_colors);
  state.counters["vertices"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_LatticeChromatic)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_PatternColoring(benchmark::State& state) {
  const auto lattice = Lattice::build(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(pattern_coloring(lattice, ReuseKind::kControl).num_colors);
}
BENCHMARK(BM_PatternColoring)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_DynamicAllocation(benchmark::State& state) {
  const auto lattice = Lattice::build(static_cast<int>(state.range(0)), 1.0);
  const auto plan = channel_plan(default_domain(DomainName::kEurope));
  std::vector<SuperframeConfig> configs;
  int k = 0;
  for (const auto& c : lattice.cells()) {
    const int bo = 2 + k % 4;
    configs.push_back({c, k % 3 == 0 ? 0 : bo - 1, bo, 0});
    ++k;
  }
  for (auto _ : state) benchmark::DoNotOptimize(allocate_dynamic(lattice, configs, plan).cycles());
}
BENCHMARK(BM_DynamicAllocation)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
