#include <benchmark/benchmark.h>

#include "dissalpha/enumerate.hpp"
#include "dissalpha/gadgets.hpp"
#include "dissalpha/generators.hpp"
#include "dissalpha/graph6.hpp"
#include "dissalpha/isomorphism.hpp"
#include "dissalpha/named_graphs.hpp"
#include "dissalpha/random_procedure.hpp"
#include "dissalpha/recognizers.hpp"
#include "dissalpha/solvers.hpp"

namespace {

using namespace dissalpha;

void BM_IndependentSetNamed(benchmark::State& state, const char* name) {
  const Graph g = named_graph(name).graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g).value);
}
BENCHMARK_CAPTURE(BM_IndependentSetNamed, fig3, "fig3");
BENCHMARK_CAPTURE(BM_IndependentSetNamed, figl, "figl");

void BM_DissociationNamed(benchmark::State& state, const char* name) {
  const Graph g = named_graph(name).graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_dissociation_set(g).value);
}
BENCHMARK_CAPTURE(BM_DissociationNamed, fig3, "fig3");
BENCHMARK_CAPTURE(BM_DissociationNamed, figl, "figl");
BENCHMARK_CAPTURE(BM_DissociationNamed, heawood, "heawood");

void BM_DissociationRandomCubic(benchmark::State& state) {
  SplitMix64 rng(7);
  std::vector<Graph> graphs;
  for (int i = 0; i < 16; ++i) graphs.push_back(random_cubic(static_cast<std::size_t>(state.range(0)), rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(max_dissociation_set(graphs[i++ % graphs.size()]).value);
}
BENCHMARK(BM_DissociationRandomCubic)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
  const Graph g = named_graph("figl").graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_diss_max_isolated(g).p);
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

void BM_DecomposeFig2(benchmark::State& state) {
  const Graph g = named_graph("fig2_right").graph;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_block_graph(g).has_value());
}
BENCHMARK(BM_DecomposeFig2);

void BM_ExpandAndIsomorphism(benchmark::State& state) {
  const auto w = named_witness("figl");
  const Graph target = named_graph("figl").graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(expand_to_Gk(w).graph, target));
}
BENCHMARK(BM_ExpandAndIsomorphism);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = named_graph("figl").graph;
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(encode_graph6(g)).size());
}
BENCHMARK(BM_Graph6RoundTrip);

void BM_MonteCarloPetersen(benchmark::State& state) {
  const Graph g = named_graph("petersen").graph;
  const VertexSet D = max_dissociation_set(g).witness;
  for (auto _ : state) benchmark::DoNotOptimize(montecarlo_I2(g, D, 10000, 1, 1).sum);
}
BENCHMARK(BM_MonteCarloPetersen)->Unit(benchmark::kMillisecond);

void BM_EnumerateSubcubic(benchmark::State& state) {
  EnumerateFilter f;
  f.subcubic = true;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(static_cast<std::size_t>(state.range(0)), f).size());
}
BENCHMARK(BM_EnumerateSubcubic)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
