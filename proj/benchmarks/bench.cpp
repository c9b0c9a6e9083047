#include <random>

#include <benchmark/benchmark.h>

#include "gf4lc/canonical.hpp"
#include "gf4lc/code.hpp"
#include "gf4lc/orbit.hpp"

namespace {

using namespace gf4lc;

Graph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) g.add_edge(i, j);
  return g;
}

const std::vector<std::vector<OrbitRecord>>& catalogs() {
  static const auto c = classify_up_to(8);
  return c;
}

void BM_CanonicalLabeling(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(BM_CanonicalLabeling)->DenseRange(8, 20, 4);

void BM_CanonicalLabelingCycle(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_labeling(g));
}
BENCHMARK(BM_CanonicalLabelingCycle)->Arg(12)->Arg(20);

void BM_WeightEnumerator(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(graph_weight_enumerator(g));
}
BENCHMARK(BM_WeightEnumerator)->DenseRange(8, 16, 4);

void BM_PartialWeights(benchmark::State& state) {
  const Graph g = random_graph(12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(partial_weight_distribution(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PartialWeights)->DenseRange(2, 6, 2);

void BM_LcOrbit(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(lc_orbit(g));
}
BENCHMARK(BM_LcOrbit)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ScalingCount(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(scaling_count(g));
}
BENCHMARK(BM_ScalingCount)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto prev = representatives(catalogs()[n - 2]);
  for (auto _ : state) benchmark::DoNotOptimize(classify(n, prev));
}
BENCHMARK(BM_Classify)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
