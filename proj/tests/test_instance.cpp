#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "graphgen.hpp"
#include "kdc2/instance.hpp"

using namespace kdc2;

TEST_CASE("instance counters track additions and removals") {
  auto owned = fixtures::make_instance(fixtures::fig2(), {});
  Instance& inst = owned.instance;
  CHECK(inst.active_count() == 14);
  CHECK(inst.candidate_count() == 14);
  CHECK(inst.active_nonedges() == 14LL * 13 / 2 - 22);

  inst.add_to_solution(0);  // v1
  CHECK(inst.solution_count() == 1);
  CHECK(inst.nonneighbors_in_solution(6) == 0);   // v7 adjacent to v1
  CHECK(inst.nonneighbors_in_solution(8) == 1);   // v9 not adjacent
  CHECK(inst.solution_nonedges() == 0);
  inst.check_consistency();

  inst.add_to_solution(8);  // v9
  CHECK(inst.solution_nonedges() == 1);
  inst.check_consistency();

  std::size_t mark = inst.trail_mark();
  inst.remove_candidate(2);  // v3
  CHECK(inst.active_count() == 13);
  CHECK(inst.degree_in_graph(7) == 4);  // v8 lost v3
  inst.check_consistency();
  inst.unwind(mark);
  CHECK(inst.active_count() == 14);
  CHECK(inst.degree_in_graph(7) == 5);
  inst.check_consistency();
}

TEST_CASE("unwind restores the exact state after random walks") {
  testgen::Rng rng(4242);
  Graph g = testgen::gnp(16, 0.4, rng);
  auto owned = fixtures::make_instance(std::move(g), {});
  Instance& inst = owned.instance;

  std::uniform_int_distribution<int> coin(0, 2);
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t mark = inst.trail_mark();
    int s_before = inst.solution_count();
    int a_before = inst.active_count();
    long long ne_before = inst.active_nonedges();
    int steps = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < steps && inst.candidate_count() > 0; ++i) {
      auto cands = inst.candidates();
      Vertex u = cands[rng() % cands.size()];
      if (coin(rng) == 0)
        inst.remove_candidate(u);
      else
        inst.add_to_solution(u);
    }
    inst.check_consistency();
    inst.unwind(mark);
    inst.check_consistency();
    CHECK(inst.solution_count() == s_before);
    CHECK(inst.active_count() == a_before);
    CHECK(inst.active_nonedges() == ne_before);
  }
}

TEST_CASE("bitmap and stamp adjacency paths produce identical counters") {
  testgen::Rng rng(777);
  Graph g = testgen::gnp(30, 0.35, rng);
  LocalGraph with = LocalGraph::from_graph(g);
  LocalGraph without = LocalGraph::from_graph(g, {}, /*with_bitmap=*/false);
  REQUIRE(!with.bitmap.empty());
  REQUIRE(without.bitmap.empty());
  Instance a(with), b(without);

  std::vector<std::pair<int, Vertex>> script;
  for (int i = 0; i < 60; ++i) script.emplace_back(static_cast<int>(rng() % 3), rng() % 30);
  for (auto [op, v] : script) {
    if (op == 2 && a.trail_mark() > 0) {
      std::size_t mark = a.trail_mark() / 2;
      a.unwind(mark);
      b.unwind(mark);
    } else if (a.is_candidate(v)) {
      if (op == 0)
        a.add_to_solution(v), b.add_to_solution(v);
      else
        a.remove_candidate(v), b.remove_candidate(v);
    }
    CHECK(a.solution_nonedges() == b.solution_nonedges());
    CHECK(a.active_nonedges() == b.active_nonedges());
    for (Vertex u : a.candidates())
      CHECK(a.nonneighbors_in_solution(u) == b.nonneighbors_in_solution(u));
  }
  a.check_consistency();
  b.check_consistency();
}
