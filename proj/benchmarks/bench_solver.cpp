#include <benchmark/benchmark.h>

#include "graphgen.hpp"
#include "kdc2/ordering.hpp"
#include "kdc2/solver.hpp"

using namespace kdc2;

namespace {

Graph bench_graph(int n) { return testgen::social_like(n, 20, 60, 0.5, 0.15, 24601); }

void BM_DegeneracyOrdering(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy_ordering(g).degeneracy);
  state.SetComplexityN(g.edge_count());
}

void BM_SolveTwoStage(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  SolverConfig cfg;
  cfg.k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto [sol, stats] = solve(g, cfg);
    benchmark::DoNotOptimize(sol.size());
  }
}

void BM_SolveDegeneracyGap(benchmark::State& state) {
  Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto [sol, stats] = solve_degeneracy_gap(g, static_cast<int>(state.range(1)));
    benchmark::DoNotOptimize(sol.size());
  }
}

}  // namespace

BENCHMARK(BM_DegeneracyOrdering)->Arg(2000)->Arg(8000)->Complexity();
BENCHMARK(BM_SolveTwoStage)
    ->Args({2000, 1})
    ->Args({2000, 3})
    ->Args({8000, 1})
    ->Args({8000, 3})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveDegeneracyGap)->Args({2000, 1})->Args({2000, 3})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
