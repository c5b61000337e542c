#include "kdc2/ordering.hpp"

#include <functional>
#include <queue>
#include <utility>

namespace kdc2 {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const Vertex n = g.vertex_count();
  DegeneracyOrdering ord;
  ord.order.reserve(n);
  ord.position.assign(n, -1);

  std::vector<int> deg(n);
  // lazy min-queue keyed by (current degree, id); stale entries are skipped.
  // Keeps the smallest-id tie-break exact at an O(log n) factor over the
  // plain bucket peel.
  using Entry = std::pair<int, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<std::uint8_t> removed(n, 0);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (removed[v] || d != deg[v]) continue;
    removed[v] = 1;
    ord.position[v] = static_cast<int>(ord.order.size());
    ord.order.push_back(v);
    ord.degeneracy = std::max(ord.degeneracy, d);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) {
        --deg[w];
        queue.emplace(deg[w], w);
      }
    }
  }
  return ord;
}

}  // namespace kdc2
