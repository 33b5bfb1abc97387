#include <benchmark/benchmark.h>

#include <map>

#include "maxqc/bounds.hpp"
#include "maxqc/gen.hpp"
#include "maxqc/iterqc.hpp"
#include "maxqc/kplex.hpp"

using namespace maxqc;

namespace {

const Graph& sf_graph(VertexId n) {
  static std::map<VertexId, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_sf(n, 10, 42)).first;
  return it->second;
}

const Graph& sw_graph(VertexId n) {
  static std::map<VertexId, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_sw(n, 10, 0.2, 7)).first;
  return it->second;
}

void BM_CoreDecompose(benchmark::State& state) {
  const Graph& g = sf_graph(static_cast<VertexId>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(core_decompose(g).max_core);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.m()));
}
BENCHMARK(BM_CoreDecompose)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GetBounds(benchmark::State& state) {
  const Graph& g = sf_graph(static_cast<VertexId>(state.range(0)));
  const Gamma gamma = Gamma::parse("0.75");
  for (auto _ : state) benchmark::DoNotOptimize(get_bounds(g, gamma).ub);
}
BENCHMARK(BM_GetBounds)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_PlexHeuristic(benchmark::State& state) {
  const Graph& g = sf_graph(10000);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plex_heu(g, k).size());
}
BENCHMARK(BM_PlexHeuristic)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SolveSf(benchmark::State& state) {
  const Graph& g = sf_graph(static_cast<VertexId>(state.range(0)));
  const Gamma gamma = Gamma::parse("0.75");
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, gamma).s_star);
}
BENCHMARK(BM_SolveSf)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_SolveSw(benchmark::State& state) {
  const Graph& g = sw_graph(static_cast<VertexId>(state.range(0)));
  const Gamma gamma = Gamma::parse("0.75");
  for (auto _ : state) benchmark::DoNotOptimize(solve(g, gamma).s_star);
}
BENCHMARK(BM_SolveSw)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
