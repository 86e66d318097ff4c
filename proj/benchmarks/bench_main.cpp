#include <benchmark/benchmark.h>

#include "locascope/combinatorics.hpp"
#include "locascope/decompose.hpp"
#include "locascope/generators.hpp"
#include "locascope/neighborhood.hpp"
#include "locascope/spectral.hpp"
#include "locascope/tester.hpp"

using namespace locascope;

namespace {

Graph grid(std::size_t side) {
  return generate(FamilySpec::parse("grid2d:" + std::to_string(side) + "x" + std::to_string(side)));
}

void BM_NeighborhoodDistribution(benchmark::State& state) {
  const Graph g = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood_distribution(g, 2));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_vertices()));
}
BENCHMARK(BM_NeighborhoodDistribution)->Arg(32)->Arg(128);

void BM_Decompose(benchmark::State& state) {
  const Graph g = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hyperfinite_decompose(g, 0.4, 200));
}
BENCHMARK(BM_Decompose)->Arg(64)->Arg(256);

void BM_IndependentSetSearch(benchmark::State& state) {
  const Graph g = generate(FamilySpec::parse("rrg:n=" + std::to_string(state.range(0)) + ",d=3,g=3,seed=3,bipartite=0"));
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g));
}
BENCHMARK(BM_IndependentSetSearch)->Arg(30)->Arg(50);

void BM_LaplacianSpectrum(benchmark::State& state) {
  const Graph g = generate(FamilySpec::parse("cycle:" + std::to_string(state.range(0))));
  SolverLimits limits;
  limits.spectral_cap = 1024;
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_spectrum(g, {}, limits));
}
BENCHMARK(BM_LaplacianSpectrum)->Arg(128)->Arg(512);

void BM_SampleStats(benchmark::State& state) {
  const Graph g = grid(64);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_stats(g, 2, static_cast<std::size_t>(state.range(0)), seed++));
}
BENCHMARK(BM_SampleStats)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
