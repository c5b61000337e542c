#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "kdc2/graph.hpp"
#include "kdc2/instance.hpp"
#include "kdc2/ordering.hpp"

namespace kdc2 {

enum class SolveMode { kTwoStage, kFullSearch, kDegeneracyGap };

struct SolverConfig {
  int k = 0;
  SolveMode mode = SolveMode::kTwoStage;
  double time_limit_sec = 0.0;  // 0 disables the limit
  bool enable_rr3 = true;
  // Seed lower bound. The search only reports solutions strictly larger, so
  // seeding above the true optimum yields an empty result.
  int initial_lb = 0;
};

/// A verified k-defective clique, vertices in ascending id order.
struct Solution {
  std::vector<Vertex> vertices;
  int k = 0;
  int size() const { return static_cast<int>(vertices.size()); }
};

/// Leaf count of the subtree under one search root together with the root's
/// candidate count after its own reductions (0 when the root itself was
/// already a k-defective clique).
struct RootLeafRecord {
  int root_size = 0;
  long long leaves = 0;
};

struct SearchStats {
  long long nodes_visited = 0;
  long long leaves = 0;
  long long rr1_removals = 0;
  long long rr2_additions = 0;
  long long rr3_removals = 0;
  long long ub_prunes = 0;  // bound prunes: |V(g)| <= lb or UB <= lb
  std::vector<RootLeafRecord> per_root;
  double elapsed_sec = 0.0;
  bool timed_out = false;
};

// Largest real root of x^{k+2} - 2x^{k+1} + 1 = 0 in (1,2), bisected to
// absolute tolerance 1e-9. Requires k >= 1.
double beta_k(int k);

// Maximum k-defective clique of g under cfg. In two-stage mode, each vertex
// of the degeneracy ordering seeds a search over its later two-hop
// neighborhood, and the full graph is searched afterwards only if nothing of
// size >= k+1 was found; full-search mode runs only the full-graph search;
// degeneracy-gap mode tests target sizes downward from α+k+1. On timeout the
// best verified solution so far is returned with stats.timed_out set.
std::pair<Solution, SearchStats> solve(const Graph& g, const SolverConfig& cfg);

// Decision search: returns a k-defective clique of size >= tau iff one
// exists, by truncating every branch whose working graph has at most tau
// vertices. Requires tau >= k+2, the regime where any solution of that size
// has diameter at most two. On timeout, a nullopt result is inconclusive
// (stats->timed_out tells the two apart when stats are requested).
std::optional<Solution> test_tau(const Graph& g, int k, int tau, SearchStats* stats = nullptr,
                                 bool enable_rr3 = true, double time_limit_sec = 0.0);

// Iterates test_tau for tau = α+k+1, α+k, ... and falls back to the
// two-stage search once tau would drop below k+2.
std::pair<Solution, SearchStats> solve_degeneracy_gap(const Graph& g, int k,
                                                      double time_limit_sec = 0.0,
                                                      bool enable_rr3 = true);

/// An extracted Stage-I instance; the bundle owns the local subgraph the
/// Instance points into.
struct EgoInstance {
  std::unique_ptr<LocalGraph> local;
  Instance instance;
};

// The Stage-I root for order position idx (0-based): S = {v}, the working
// graph is G induced on v, its later neighbors A, and the later neighbors of
// A, where "later" means at position >= idx in the degeneracy ordering. An
// isolated-in-suffix v yields the one-vertex instance ({v},{v}).
EgoInstance extract_ego_instance(const Graph& g, const DegeneracyOrdering& ord, int idx);

// Exhausts the search tree rooted at inst, improving best in place. best
// holds ids of the graph inst.local() was cut from. cfg.mode is ignored.
void branch_and_bound(Instance& inst, const SolverConfig& cfg, Solution& best,
                      SearchStats& stats);

}  // namespace kdc2
