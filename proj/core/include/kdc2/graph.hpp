#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace kdc2 {

using Vertex = int;

/// Immutable simple undirected graph in compressed sorted-adjacency form.
/// Vertex ids are dense integers 0..n-1. Construction drops self-loops and
/// duplicate edges, so the class invariants (symmetry, strict sortedness,
/// simplicity) hold for every live object; validate() re-checks them.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on n vertices from an arbitrary edge list. Self-loops and
  // duplicate/reversed duplicate edges are dropped. Ids outside [0,n) throw.
  static Graph from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges);

  Vertex vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int max_degree() const { return max_degree_; }

  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  // Re-checks all structural invariants; throws std::logic_error on failure.
  void validate() const;

 private:
  Vertex n_ = 0;
  long long m_ = 0;
  int max_degree_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Vertex subset with O(1) membership and deterministic (insertion-order)
/// iteration. Bound to a universe size at construction; inserting an id
/// outside [0,universe) throws std::out_of_range.
class VertexSet {
 public:
  explicit VertexSet(Vertex universe) : in_(static_cast<std::size_t>(universe), 0) {}
  VertexSet(Vertex universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
    for (Vertex v : vs) insert(v);
  }
  VertexSet(Vertex universe, const std::vector<Vertex>& vs) : VertexSet(universe) {
    for (Vertex v : vs) insert(v);
  }

  // Returns false if v was already present.
  bool insert(Vertex v);
  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < in_.size() && in_[v];
  }
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  Vertex universe() const { return static_cast<Vertex>(in_.size()); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Vertex>& items() const { return items_; }
  std::vector<Vertex> sorted() const;

 private:
  std::vector<Vertex> items_;
  std::vector<std::uint8_t> in_;
};

// |Ē(S)|: number of unordered vertex pairs of S that are not edges of g.
// Throws std::invalid_argument if S contains an id outside g.
long long non_edge_count(const Graph& g, const VertexSet& s);

// True iff S induces at most k non-edges in g.
bool is_k_defective(const Graph& g, const VertexSet& s, int k);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id, ascending
  std::vector<Vertex> to_local;   // parent id -> local id, -1 if absent
};

// Subgraph of g induced by U; local ids are assigned in ascending parent-id
// order so the mapping is deterministic.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u);

}  // namespace kdc2
