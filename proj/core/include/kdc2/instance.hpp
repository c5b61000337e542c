#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "kdc2/graph.hpp"

namespace kdc2 {

/// Dense adjacency bitmap for small instance graphs; one bit per ordered pair.
class AdjacencyBitmap {
 public:
  AdjacencyBitmap() = default;
  explicit AdjacencyBitmap(const Graph& g);

  bool empty() const { return words_per_row_ == 0; }
  bool test(Vertex u, Vertex v) const {
    const std::uint64_t* row = words_.data() + static_cast<std::size_t>(u) * words_per_row_;
    return (row[v >> 6] >> (v & 63)) & 1u;
  }

 private:
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A root subgraph for one branch-and-bound run: the induced graph, the
/// mapping back to the ids of the graph it was cut from, and a dense bitmap
/// when the graph is small enough for one (Stage-I ego subgraphs almost
/// always are).
struct LocalGraph {
  static constexpr Vertex kBitmapLimit = 4096;

  Graph graph;
  std::vector<Vertex> to_root;  // local -> root id; empty means identity
  AdjacencyBitmap bitmap;

  static LocalGraph from_graph(Graph g, std::vector<Vertex> to_root = {},
                               bool with_bitmap = true);
  static LocalGraph whole(const Graph& root);  // identity copy of root

  Vertex root_id(Vertex local) const { return to_root.empty() ? local : to_root[local]; }
};

/// A backtracking instance (g,S): the working vertex set of g partitioned
/// into S, candidates and removed vertices, with the cached counters every
/// reduction rule reads:
///   - solution_nonedges()            |Ē(S)|
///   - nonneighbors_in_solution(u)    |N̄_S(u)| for candidates u
///   - degree_in_graph(u)             d_g(u) within the active vertex set
///
/// All mutations are recorded on a trail; unwind(mark) restores the exact
/// prior state, which is what the search uses to backtrack. An Instance is
/// single-owner and not thread-safe; distinct instances are independent.
class Instance {
 public:
  Instance() = default;
  explicit Instance(const LocalGraph& local);

  const LocalGraph& local() const { return *local_; }
  const Graph& graph() const { return local_->graph; }

  int total_count() const { return n_; }
  int active_count() const { return active_end_; }
  int solution_count() const { return s_end_; }
  int candidate_count() const { return active_end_ - s_end_; }

  std::span<const Vertex> solution() const { return {verts_.data(), verts_.data() + s_end_}; }
  std::span<const Vertex> candidates() const {
    return {verts_.data() + s_end_, verts_.data() + active_end_};
  }
  std::span<const Vertex> active() const { return {verts_.data(), verts_.data() + active_end_}; }

  bool in_solution(Vertex v) const { return pos_[v] < s_end_; }
  bool is_candidate(Vertex v) const { return pos_[v] >= s_end_ && pos_[v] < active_end_; }
  bool is_active(Vertex v) const { return pos_[v] < active_end_; }

  long long solution_nonedges() const { return nonedges_s_; }
  // |Ē(V(g))| over the whole active set; the terminal test of the search.
  long long active_nonedges() const {
    long long a = active_end_;
    return a * (a - 1) / 2 - active_edges_;
  }
  int nonneighbors_in_solution(Vertex u) const { return nbar_s_[u]; }
  int degree_in_graph(Vertex u) const { return deg_[u]; }

  // Moves a candidate into S, maintaining |Ē(S)| and the |N̄_S| counters.
  void add_to_solution(Vertex u);
  // Removes a candidate from g, maintaining active degrees and edge count.
  void remove_candidate(Vertex u);

  std::size_t trail_mark() const { return trail_.size(); }
  void unwind(std::size_t mark);

  // Recomputes every cached counter from the adjacency structure and throws
  // std::logic_error on any mismatch. Test hook.
  void check_consistency() const;

 private:
  enum class Op : std::uint8_t { kAddSolution, kRemoveCandidate };
  struct TrailEntry {
    Op op;
    Vertex v;
  };

  void swap_slots(Vertex u, Vertex v);
  void bump_stamp();
  template <int Delta>
  void shift_nbar_for(Vertex u);

  const LocalGraph* local_ = nullptr;
  int n_ = 0;
  int s_end_ = 0;
  int active_end_ = 0;
  std::vector<Vertex> verts_;
  std::vector<int> pos_;
  std::vector<int> nbar_s_;
  std::vector<int> deg_;
  long long nonedges_s_ = 0;
  long long active_edges_ = 0;
  std::vector<TrailEntry> trail_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t stamp_gen_ = 0;
};

}  // namespace kdc2
