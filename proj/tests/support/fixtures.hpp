#pragma once

// Small named graphs used across the test suites. fig1/fig2/fig7 are the
// worked examples the expected values were frozen from; vertex v_i (resp.
// s_i/u_i) maps to id i-1 (s1..s3 -> 0..2, u1..u5 -> 3..7 for fig7).

#include <memory>
#include <utility>
#include <vector>

#include "kdc2/graph.hpp"
#include "kdc2/instance.hpp"

namespace kdc2::fixtures {

inline Graph fig1() {
  return Graph::from_edges(7, {{0, 1},
                               {1, 2},
                               {2, 5},
                               {4, 5},
                               {3, 4},
                               {0, 3},
                               {3, 5},
                               {0, 5},
                               {0, 2},
                               {2, 3},
                               {1, 3},
                               {1, 4},
                               {2, 4},
                               {0, 6},
                               {1, 6}});
}

inline Graph fig2() {
  return Graph::from_edges(14, {{0, 6},
                                {6, 8},
                                {8, 9},
                                {6, 9},
                                {6, 7},
                                {7, 8},
                                {0, 7},
                                {7, 9},
                                {4, 9},
                                {4, 5},
                                {5, 12},
                                {12, 13},
                                {11, 13},
                                {1, 11},
                                {1, 10},
                                {10, 13},
                                {2, 7},
                                {2, 3},
                                {3, 10},
                                {10, 11},
                                {11, 12},
                                {10, 12}});
}

inline Graph fig7_graph() {
  return Graph::from_edges(8, {{1, 2},
                               {0, 3},
                               {1, 3},
                               {2, 3},
                               {0, 4},
                               {1, 4},
                               {2, 4},
                               {1, 5},
                               {2, 5},
                               {0, 6},
                               {2, 6},
                               {0, 7},
                               {1, 7},
                               {3, 4},
                               {3, 6}});
}

struct OwnedInstance {
  std::unique_ptr<LocalGraph> local;
  Instance instance;
};

inline OwnedInstance make_instance(Graph g, const std::vector<Vertex>& solution) {
  OwnedInstance out;
  out.local = std::make_unique<LocalGraph>(LocalGraph::from_graph(std::move(g)));
  out.instance = Instance(*out.local);
  for (Vertex v : solution) out.instance.add_to_solution(v);
  return out;
}

// (g,S) of the RR3 worked example: S = {s1,s2,s3}, candidates u1..u5.
inline OwnedInstance fig7_instance() { return make_instance(fig7_graph(), {0, 1, 2}); }

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph edgeless(int n) { return Graph::from_edges(n, {}); }

}  // namespace kdc2::fixtures
