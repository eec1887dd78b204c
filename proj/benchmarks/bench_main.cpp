#include <benchmark/benchmark.h>

#include <random>

#include "rslab/canonical.hpp"
#include "rslab/census.hpp"
#include "rslab/constructions.hpp"
#include "rslab/enumeration.hpp"
#include "rslab/rainbow.hpp"
#include "rslab/saturation.hpp"

using namespace rslab;

namespace {

std::vector<Graph> random_graphs(int n, int count) {
  std::mt19937 rng(2024);
  std::bernoulli_distribution coin(0.5);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (coin(rng)) edges.push_back({a, b});
    out.push_back(Graph::build(n, edges));
  }
  return out;
}

void BM_CanonicalFormRandom(benchmark::State& state) {
  const auto graphs = random_graphs(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalFormRandom)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_CanonicalFormFoldedCube(benchmark::State& state) {
  const Graph g = folded_cube(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormFoldedCube)->Arg(5)->Arg(6)->Arg(7);

void BM_EnumerateGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateGraphs)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ForceFoldedCubePlusEdge(benchmark::State& state) {
  const Graph f = folded_cube(5).graph;
  const Edge e = non_edge_orbit_representatives(f).front();
  const Graph g = f.with_edge(e.u, e.v);
  for (auto _ : state) benchmark::DoNotOptimize(forces_rainbow(g, PatternSpec::path(5)).status);
}
BENCHMARK(BM_ForceFoldedCubePlusEdge);

void BM_RainbowFreeSearchFoldedCube(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const Graph f = folded_cube(ell).graph;
  for (auto _ : state) benchmark::DoNotOptimize(search_rainbow_free_colouring(f, PatternSpec::path(ell)).status);
}
BENCHMARK(BM_RainbowFreeSearchFoldedCube)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ProperlyRainbowSaturatedGadget(benchmark::State& state) {
  const Graph g = broom_gadget(1).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(is_properly_rainbow_saturated(g, PatternSpec::broom(4, 1)).status);
}
BENCHMARK(BM_ProperlyRainbowSaturatedGadget);

void BM_CensusPrsatP4(benchmark::State& state) {
  CensusOptions opts;
  opts.use_env_cache = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(prsat_number(static_cast<int>(state.range(0)), PatternSpec::path(4), opts).value);
}
BENCHMARK(BM_CensusPrsatP4)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
