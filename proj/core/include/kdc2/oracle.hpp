#pragma once

#include "kdc2/instance.hpp"
#include "kdc2/solver.hpp"

namespace kdc2 {

// Exact maximum k-defective clique by exhaustive subset enumeration, in
// decreasing target size with an early exit (any s with C(s,2) <= k is
// feasible outright). Independent of the solver's search code; intended for
// graphs of up to ~20 vertices.
Solution brute_force_max_kdc(const Graph& g, int k);

// Size of the largest k-defective clique within inst's working graph that
// contains all of S, by enumeration over candidate subsets. Throws
// std::invalid_argument if S itself induces more than k non-edges.
int brute_force_instance_opt(const Instance& inst, int k);

}  // namespace kdc2
