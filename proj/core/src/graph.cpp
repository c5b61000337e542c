#include "kdc2/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kdc2 {

Graph Graph::from_edges(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint " + std::to_string(u >= 0 && u < n ? v : u) +
                                  " out of range [0," + std::to_string(n) + ")");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  // drop self-loops
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [](const auto& e) { return e.first == e.second; }),
              edges.end());

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<long long>(edges.size());
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    g.max_degree_ = std::max(g.max_degree_, deg[v]);
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::validate() const {
  if (static_cast<Vertex>(offsets_.size()) != n_ + 1)
    throw std::logic_error("Graph: offset table size mismatch");
  long long half_sum = 0;
  int dmax = 0;
  for (Vertex v = 0; v < n_; ++v) {
    auto nb = neighbors(v);
    half_sum += static_cast<long long>(nb.size());
    dmax = std::max(dmax, static_cast<int>(nb.size()));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[i];
      if (w < 0 || w >= n_) throw std::logic_error("Graph: neighbor id out of range");
      if (w == v) throw std::logic_error("Graph: self-loop");
      if (i > 0 && nb[i - 1] >= w) throw std::logic_error("Graph: adjacency list not strictly sorted");
      if (!adjacent(w, v)) throw std::logic_error("Graph: adjacency not symmetric");
    }
  }
  if (half_sum != 2 * m_) throw std::logic_error("Graph: edge count mismatch");
  if (dmax != max_degree_) throw std::logic_error("Graph: max degree mismatch");
}

bool VertexSet::insert(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= in_.size())
    throw std::out_of_range("VertexSet: id " + std::to_string(v) + " outside universe");
  if (in_[v]) return false;
  in_[v] = 1;
  items_.push_back(v);
  return true;
}

std::vector<Vertex> VertexSet::sorted() const {
  std::vector<Vertex> out = items_;
  std::sort(out.begin(), out.end());
  return out;
}

long long non_edge_count(const Graph& g, const VertexSet& s) {
  std::vector<std::uint8_t> in_s(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw std::invalid_argument("non_edge_count: vertex id out of range");
    in_s[v] = 1;
  }
  long long edges_in = 0;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (in_s[w]) ++edges_in;
  edges_in /= 2;
  long long sz = s.size();
  return sz * (sz - 1) / 2 - edges_in;
}

bool is_k_defective(const Graph& g, const VertexSet& s, int k) {
  return non_edge_count(g, s) <= k;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
  InducedSubgraph out;
  out.to_parent = u.sorted();
  out.to_local.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    Vertex p = out.to_parent[i];
    if (!g.has_vertex(p)) throw std::invalid_argument("induced_subgraph: vertex id out of range");
    out.to_local[p] = static_cast<Vertex>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (Vertex w : g.neighbors(out.to_parent[i]))
      if (out.to_local[w] > static_cast<Vertex>(i))
        edges.emplace_back(static_cast<Vertex>(i), out.to_local[w]);
  out.graph = Graph::from_edges(static_cast<Vertex>(out.to_parent.size()), std::move(edges));
  return out;
}

}  // namespace kdc2
