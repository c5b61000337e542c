#pragma once

#include <vector>

#include "kdc2/instance.hpp"

namespace kdc2 {

// Excess-removal rule: drops every candidate u with |Ē(S∪u)| > k. One scan
// suffices since removals change neither |Ē(S)| nor |N̄_S|. Returns the
// number removed; removed vertices are appended to *removed when given.
int apply_rr1(Instance& inst, int k, std::vector<Vertex>* removed = nullptr);

// High-degree rule: greedily moves into S every candidate u with
// |Ē(S∪u)| <= k and d_g(u) >= |V(g)|-2. Additions change |Ē(S)|, so the scan
// repeats until a full pass adds nothing.
int apply_rr2(Instance& inst, int k, std::vector<Vertex>* added = nullptr);

struct ReduceResult {
  int removed = 0;
  int added = 0;
};

// Alternates RR1 and RR2 scans (RR1 first) until neither changes anything.
ReduceResult reduce_to_fixpoint(Instance& inst, int k,
                                std::vector<Vertex>* removed = nullptr,
                                std::vector<Vertex>* added = nullptr);

// Branching rule: the candidate with the most non-neighbors in S, ties by
// smallest id; when every candidate is fully adjacent to S this degenerates
// to the smallest-id candidate. Throws std::logic_error on an empty
// candidate set.
Vertex select_branching_vertex(const Instance& inst);

// Degree-sequence upper bound: |S| plus the longest prefix of candidates, in
// non-decreasing |N̄_S| order, whose counts sum to at most k - |Ē(S)|.
int degree_sequence_ub(const Instance& inst, int k);

struct Rr3Decision {
  Vertex v;
  bool removed;
};

/// Reusable workspace for apply_rr3. `order`/`suffix_sums` hold the counting
/// sort of candidates by |N̄_S| with suffix sums of the sorted counts;
/// `kept` is X, the kept-vertex list in processing (non-decreasing |N̄_S|)
/// order. The merged ordering examined for each candidate is X followed by
/// the unprocessed tail, which is sorted by construction, and the D/C1/C2
/// segments around position r = lb - |S| each span at most those two arrays.
struct Rr3Scratch {
  std::vector<Vertex> order;
  std::vector<int> sorted_val;
  std::vector<long long> suffix_sums;
  std::vector<int> count_lt;       // count_lt[c] = #candidates with |N̄_S| < c
  std::vector<int> pos_in_order;   // per vertex, 1-based index in `order`
  std::vector<Vertex> kept;        // X
  std::vector<int> kept_vals;
  std::vector<long long> kept_prefix;
  std::vector<int> kept_index;     // per vertex, index in X or -1
  std::vector<int> kept_first_of_val;
  std::vector<int> kept_count_of_val;
};

// Degree-sequence reduction rule, one pass over the candidates of (g,S) in
// non-decreasing |N̄_S| order. A candidate u is removed exactly when the
// degree-sequence upper bound of (g, S∪u), evaluated against the current
// kept/unprocessed ordering, is at most lb; if at any point fewer than
// lb - |S| candidates could remain, every candidate is removed. Runs in
// O(|E(g)| + k) time. Requires |S| < lb < |V(g)| (throws std::logic_error).
//
// When `log` is given it receives one entry per candidate in processing
// order with the per-vertex prune decision.
int apply_rr3(Instance& inst, int k, int lb, Rr3Scratch& scratch,
              std::vector<Rr3Decision>* log = nullptr);

}  // namespace kdc2
