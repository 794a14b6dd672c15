#include <benchmark/benchmark.h>

#include "efsub/families.hpp"
#include "efsub/game.hpp"
#include "efsub/pattern.hpp"

using namespace efsub;

static void BM_BoundedCliquePair(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  Graph g = generate(FamilySpec::complete(l));
  Graph h = generate(FamilySpec::complete(l - 1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded(g, h, l, l).spoiler_wins);
}
BENCHMARK(BM_BoundedCliquePair)->Arg(3)->Arg(4)->Arg(5);

static void BM_UnboundedCliquePair(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  Graph g = generate(FamilySpec::complete(l));
  Graph h = generate(FamilySpec::complete(l - 1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_unbounded(g, h, l).spoiler_wins);
}
BENCHMARK(BM_UnboundedCliquePair)->Arg(3)->Arg(4)->Arg(5);

static void BM_DepthPathVsCycle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = generate(FamilySpec::path(n));
  Graph h = generate(FamilySpec::cycle(n));
  for (auto _ : state) benchmark::DoNotOptimize(depth_D(g, h));
}
BENCHMARK(BM_DepthPathVsCycle)->Arg(5)->Arg(6);

static void BM_SubgraphSparkler(benchmark::State& state) {
  Graph host = generate(FamilySpec::subdivided_star(4, 5));
  Graph pattern = generate(FamilySpec::sparkler(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(find_subgraph(host, pattern).has_value());
}
BENCHMARK(BM_SubgraphSparkler);

BENCHMARK_MAIN();
