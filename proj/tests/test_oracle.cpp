#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "graphgen.hpp"
#include "kdc2/oracle.hpp"

using namespace kdc2;

namespace {

// textbook exhaustive maximum clique, recursion over include/exclude; the
// k=0 cross-check for the subset-enumeration oracle
int max_clique_recursive(const Graph& g, Vertex v, std::vector<Vertex>& chosen) {
  if (v == g.vertex_count()) return static_cast<int>(chosen.size());
  int best = max_clique_recursive(g, v + 1, chosen);
  bool ok = true;
  for (Vertex w : chosen)
    if (!g.adjacent(v, w)) {
      ok = false;
      break;
    }
  if (ok) {
    chosen.push_back(v);
    best = std::max(best, max_clique_recursive(g, v + 1, chosen));
    chosen.pop_back();
  }
  return best;
}

}  // namespace

TEST_CASE("oracle answers the paper examples") {
  CHECK(brute_force_max_kdc(fixtures::fig1(), 2).size() == 6);
  CHECK(brute_force_max_kdc(fixtures::fig1(), 0).size() == 4);
  Graph g2 = fixtures::fig2();
  Solution s = brute_force_max_kdc(g2, 2);
  CHECK(s.size() == 5);
  // both witnesses named in the text are feasible
  CHECK(is_k_defective(g2, VertexSet(14, {0, 6, 7, 8, 9}), 2));       // {v1,v7,v8,v9,v10}
  CHECK(is_k_defective(g2, VertexSet(14, {1, 10, 11, 12, 13}), 2));   // {v2,v11..v14}
  CHECK(is_k_defective(g2, VertexSet(14, s.vertices), 2));
}

TEST_CASE("complete graphs are their own optimum") {
  for (int n : {1, 3, 6})
    for (int k : {0, 2, 5}) CHECK(brute_force_max_kdc(fixtures::complete(n), k).size() == n);
}

TEST_CASE("oracle at k=0 equals exhaustive maximum clique") {
  testgen::Rng rng(1618);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = testgen::gnp(10, 0.5, rng);
    std::vector<Vertex> chosen;
    CHECK(brute_force_max_kdc(g, 0).size() == max_clique_recursive(g, 0, chosen));
  }
}

TEST_CASE("oracle is hereditary-consistent") {
  testgen::Rng rng(2718);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = testgen::gnp(9, 0.4, rng);
    int k = static_cast<int>(rng() % 3);
    int whole = brute_force_max_kdc(g, k).size();

    // dropping a vertex never helps
    VertexSet rest(9);
    for (Vertex v = 1; v < 9; ++v) rest.insert(v);
    auto sub = induced_subgraph(g, rest);
    CHECK(brute_force_max_kdc(sub.graph, k).size() <= whole);

    // adding an edge never hurts
    Vertex a = static_cast<Vertex>(rng() % 9), b = static_cast<Vertex>(rng() % 9);
    if (a != b && !g.adjacent(a, b)) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (Vertex v = 0; v < 9; ++v)
        for (Vertex w : g.neighbors(v))
          if (v < w) edges.emplace_back(v, w);
      edges.emplace_back(a, b);
      Graph denser = Graph::from_edges(9, std::move(edges));
      CHECK(brute_force_max_kdc(denser, k).size() >= whole);
    }
  }
}

TEST_CASE("monotonicity in k on small graphs") {
  testgen::Rng rng(141);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = testgen::gnp(9, 0.45, rng);
    int prev = brute_force_max_kdc(g, 0).size();
    for (int k = 1; k <= 4; ++k) {
      int cur = brute_force_max_kdc(g, k).size();
      CHECK(cur >= prev);
      CHECK(cur <= prev + 1);
      prev = cur;
    }
  }
}

TEST_CASE("instance optimum respects S and matches the filtered oracle") {
  testgen::Rng rng(33);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = testgen::gnp(9, 0.5, rng);
    int k = static_cast<int>(rng() % 4);
    // choose a feasible anchor pair when possible
    std::vector<Vertex> sol;
    for (Vertex v = 0; v < 9 && sol.size() < 2; ++v) {
      if (sol.empty() || g.adjacent(sol[0], v)) sol.push_back(v);
    }
    Graph copy = g;
    auto owned = fixtures::make_instance(std::move(copy), sol);
    int got = brute_force_instance_opt(owned.instance, k);

    // filtered enumeration: best feasible superset of S over all subsets
    int expect = 0;
    for (unsigned mask = 0; mask < (1u << 9); ++mask) {
      VertexSet s(9);
      bool covers = true;
      for (Vertex v = 0; v < 9; ++v)
        if (mask >> v & 1) s.insert(v);
      for (Vertex v : sol)
        if (!s.contains(v)) covers = false;
      if (covers && is_k_defective(g, s, k)) expect = std::max(expect, s.size());
    }
    CHECK(got == expect);
  }
}

TEST_CASE("instance optimum edge cases") {
  auto all_in = fixtures::make_instance(fixtures::complete(4), {0, 1, 2, 3});
  CHECK(brute_force_instance_opt(all_in.instance, 1) == 4);

  // infeasible S is a contract violation
  auto bad = fixtures::make_instance(fixtures::edgeless(4), {0, 1, 2});
  CHECK_THROWS_AS(brute_force_instance_opt(bad.instance, 1), std::invalid_argument);
}
