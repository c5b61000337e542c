#include <benchmark/benchmark.h>

#include <memory>

#include "graphgen.hpp"
#include "kdc2/instance.hpp"
#include "kdc2/rules.hpp"

using namespace kdc2;

namespace {

struct Setup {
  std::unique_ptr<LocalGraph> local;
  std::unique_ptr<Instance> inst;

  explicit Setup(long long m) {
    const int n = static_cast<int>(m / 10);
    testgen::Rng rng(m);
    Graph base = testgen::gnm(n, m, rng);
    std::vector<std::pair<Vertex, Vertex>> edges = {{0, 1}, {0, 2}, {1, 2}};
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : base.neighbors(v))
        if (v < w) edges.emplace_back(v, w);
    local = std::make_unique<LocalGraph>(
        LocalGraph::from_graph(Graph::from_edges(n, std::move(edges))));
    inst = std::make_unique<Instance>(*local);
    for (Vertex v : {0, 1, 2}) inst->add_to_solution(v);
  }
};

void BM_ApplyRr3(benchmark::State& state) {
  Setup setup(state.range(0));
  Rr3Scratch scratch;
  for (auto _ : state) {
    std::size_t mark = setup.inst->trail_mark();
    benchmark::DoNotOptimize(apply_rr3(*setup.inst, 3, 5, scratch));
    setup.inst->unwind(mark);
  }
  state.SetComplexityN(state.range(0));
}

void BM_DegreeSequenceUb(benchmark::State& state) {
  Setup setup(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(degree_sequence_ub(*setup.inst, 3));
  state.SetComplexityN(state.range(0));
}

void BM_ReduceToFixpoint(benchmark::State& state) {
  Setup setup(state.range(0));
  for (auto _ : state) {
    std::size_t mark = setup.inst->trail_mark();
    reduce_to_fixpoint(*setup.inst, 3);
    setup.inst->unwind(mark);
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_ApplyRr3)->RangeMultiplier(10)->Range(10000, 1000000)->Complexity();
BENCHMARK(BM_DegreeSequenceUb)->RangeMultiplier(10)->Range(10000, 1000000)->Complexity();
BENCHMARK(BM_ReduceToFixpoint)->RangeMultiplier(10)->Range(10000, 1000000)->Complexity();
BENCHMARK_MAIN();
