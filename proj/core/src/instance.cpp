#include "kdc2/instance.hpp"

#include <numeric>
#include <stdexcept>

namespace kdc2 {

AdjacencyBitmap::AdjacencyBitmap(const Graph& g) {
  const Vertex n = g.vertex_count();
  words_per_row_ = (static_cast<std::size_t>(n) + 63) / 64;
  words_.assign(words_per_row_ * static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t* row = words_.data() + static_cast<std::size_t>(v) * words_per_row_;
    for (Vertex w : g.neighbors(v)) row[w >> 6] |= std::uint64_t{1} << (w & 63);
  }
}

LocalGraph LocalGraph::from_graph(Graph g, std::vector<Vertex> to_root, bool with_bitmap) {
  LocalGraph lg;
  lg.graph = std::move(g);
  lg.to_root = std::move(to_root);
  if (with_bitmap && lg.graph.vertex_count() <= kBitmapLimit)
    lg.bitmap = AdjacencyBitmap(lg.graph);
  return lg;
}

LocalGraph LocalGraph::whole(const Graph& root) { return from_graph(root); }

Instance::Instance(const LocalGraph& local)
    : local_(&local), n_(local.graph.vertex_count()) {
  s_end_ = 0;
  active_end_ = n_;
  verts_.resize(n_);
  std::iota(verts_.begin(), verts_.end(), 0);
  pos_ = verts_;
  nbar_s_.assign(n_, 0);
  deg_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) deg_[v] = local.graph.degree(v);
  nonedges_s_ = 0;
  active_edges_ = local.graph.edge_count();
  stamp_.assign(n_, 0);
}

void Instance::swap_slots(Vertex u, Vertex v) {
  if (u == v) return;
  std::swap(verts_[pos_[u]], verts_[pos_[v]]);
  std::swap(pos_[u], pos_[v]);
}

void Instance::bump_stamp() {
  if (++stamp_gen_ == 0) {
    stamp_.assign(stamp_.size(), 0);
    stamp_gen_ = 1;
  }
}

// Adjusts nbar_s_ of every candidate that is a non-neighbor of u by Delta.
// Caller guarantees u itself is not in the candidate range.
template <int Delta>
void Instance::shift_nbar_for(Vertex u) {
  if (!local_->bitmap.empty()) {
    const auto& bm = local_->bitmap;
    for (int i = s_end_; i < active_end_; ++i) {
      Vertex w = verts_[i];
      if (!bm.test(u, w)) nbar_s_[w] += Delta;
    }
  } else {
    bump_stamp();
    for (Vertex w : local_->graph.neighbors(u)) stamp_[w] = stamp_gen_;
    for (int i = s_end_; i < active_end_; ++i) {
      Vertex w = verts_[i];
      if (stamp_[w] != stamp_gen_) nbar_s_[w] += Delta;
    }
  }
}

void Instance::add_to_solution(Vertex u) {
  swap_slots(u, verts_[s_end_]);
  ++s_end_;
  nonedges_s_ += nbar_s_[u];
  shift_nbar_for<+1>(u);
  trail_.push_back({Op::kAddSolution, u});
}

void Instance::remove_candidate(Vertex u) {
  swap_slots(u, verts_[active_end_ - 1]);
  --active_end_;
  for (Vertex w : local_->graph.neighbors(u))
    if (pos_[w] < active_end_) --deg_[w];
  active_edges_ -= deg_[u];
  trail_.push_back({Op::kRemoveCandidate, u});
}

void Instance::unwind(std::size_t mark) {
  while (trail_.size() > mark) {
    auto [op, u] = trail_.back();
    trail_.pop_back();
    if (op == Op::kAddSolution) {
      shift_nbar_for<-1>(u);
      nonedges_s_ -= nbar_s_[u];
      --s_end_;  // u sits exactly at slot s_end_ again
    } else {
      active_edges_ += deg_[u];
      for (Vertex w : local_->graph.neighbors(u))
        if (pos_[w] < active_end_) ++deg_[w];
      ++active_end_;  // u sits exactly at slot active_end_-1 again
    }
  }
}

void Instance::check_consistency() const {
  const Graph& g = local_->graph;
  VertexSet s(n_);
  for (Vertex v : solution()) s.insert(v);
  if (non_edge_count(g, s) != nonedges_s_)
    throw std::logic_error("Instance: |Ē(S)| cache out of date");
  long long edges = 0;
  for (int i = 0; i < active_end_; ++i) {
    Vertex v = verts_[i];
    int d = 0, nb = 0;
    for (Vertex w : g.neighbors(v)) {
      if (is_active(w)) ++d;
      if (in_solution(w)) ++nb;
    }
    edges += d;
    if (deg_[v] != d) throw std::logic_error("Instance: d_g cache out of date");
    if (i >= s_end_ && nbar_s_[v] != s_end_ - nb)
      throw std::logic_error("Instance: |N̄_S| cache out of date");
  }
  if (edges != 2 * active_edges_) throw std::logic_error("Instance: active edge count out of date");
  for (Vertex v = 0; v < n_; ++v)
    if (verts_[pos_[v]] != v) throw std::logic_error("Instance: position table broken");
}

}  // namespace kdc2
