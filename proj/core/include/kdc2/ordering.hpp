#pragma once

#include <vector>

#include "kdc2/graph.hpp"

namespace kdc2 {

/// Degeneracy ordering produced by the peeling algorithm: order[i] has the
/// smallest degree in the subgraph induced by {order[i],...,order[n-1]}, and
/// degeneracy is the maximum of those removal-time degrees.
struct DegeneracyOrdering {
  std::vector<Vertex> order;    // order[i] = i-th peeled vertex
  std::vector<int> position;    // inverse permutation: position[order[i]] == i
  int degeneracy = 0;
};

// Peeling with a deterministic tie-break: among minimum-degree vertices the
// smallest id is removed first.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

// α + k + 1, an upper bound on the maximum k-defective clique size.
inline int degeneracy_upper_bound(const DegeneracyOrdering& ord, int k) {
  return ord.degeneracy + k + 1;
}

}  // namespace kdc2
