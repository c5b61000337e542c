#include "kdc2/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace kdc2 {

namespace {

// lexicographic s-combinations over n items; returns false when exhausted
bool next_combination(std::vector<int>& c, int n) {
  const int s = static_cast<int>(c.size());
  int i = s - 1;
  while (i >= 0 && c[i] == n - s + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  return true;
}

long long pairs(long long s) { return s * (s - 1) / 2; }

}  // namespace

Solution brute_force_max_kdc(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("brute_force_max_kdc: graph too large for the oracle");
  std::vector<std::uint64_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;

  Solution out;
  out.k = k;
  for (int s = n; s >= 0; --s) {
    if (pairs(s) <= k) {
      // every s-subset misses at most C(s,2) edges, so any one is feasible
      out.vertices.resize(s);
      for (int i = 0; i < s; ++i) out.vertices[i] = i;
      return out;
    }
    std::vector<int> comb(s);
    for (int i = 0; i < s; ++i) comb[i] = i;
    do {
      std::uint64_t mask = 0;
      for (int v : comb) mask |= std::uint64_t{1} << v;
      long long edges = 0;
      for (int v : comb) edges += std::popcount(adj[v] & mask);
      edges /= 2;
      if (pairs(s) - edges <= k) {
        out.vertices.assign(comb.begin(), comb.end());
        return out;
      }
    } while (next_combination(comb, n));
  }
  return out;
}

int brute_force_instance_opt(const Instance& inst, int k) {
  const Graph& g = inst.graph();
  const int s_size = inst.solution_count();
  // recompute |Ē(S)| from adjacency: the oracle trusts no caches
  long long es = 0;
  for (int i = 0; i < s_size; ++i)
    for (int j = i + 1; j < s_size; ++j)
      if (!g.adjacent(inst.solution()[i], inst.solution()[j])) ++es;
  if (es > k) throw std::invalid_argument("brute_force_instance_opt: S is not a k-defective clique");

  std::vector<Vertex> cand(inst.candidates().begin(), inst.candidates().end());
  std::sort(cand.begin(), cand.end());
  const int t = static_cast<int>(cand.size());
  if (t > 64) throw std::invalid_argument("brute_force_instance_opt: instance too large for the oracle");

  std::vector<long long> nbar_s(t, 0);
  std::vector<std::uint64_t> adj(t, 0);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < s_size; ++j)
      if (!g.adjacent(cand[i], inst.solution()[j])) ++nbar_s[i];
    for (int j = 0; j < t; ++j)
      if (j != i && g.adjacent(cand[i], cand[j])) adj[i] |= std::uint64_t{1} << j;
  }

  for (int extra = t; extra >= 1; --extra) {
    std::vector<int> comb(extra);
    for (int i = 0; i < extra; ++i) comb[i] = i;
    do {
      std::uint64_t mask = 0;
      long long nonedges = es;
      for (int i : comb) {
        mask |= std::uint64_t{1} << i;
        nonedges += nbar_s[i];
      }
      long long edges = 0;
      for (int i : comb) edges += std::popcount(adj[i] & mask);
      edges /= 2;
      nonedges += pairs(extra) - edges;
      if (nonedges <= k) return s_size + extra;
    } while (next_combination(comb, t));
  }
  return s_size;
}

}  // namespace kdc2
