#pragma once

#include <cstdint>
#include <random>

#include "kdc2/graph.hpp"

namespace kdc2::testgen {

using Rng = std::mt19937_64;

// Erdős–Rényi G(n,p).
Graph gnp(int n, double p, Rng& rng);

// Uniform graph with ~m distinct edges (sampled pairs, deduplicated).
Graph gnm(int n, long long m, Rng& rng);

// Overlapping-community graph at social-network-like density: communities of
// size in [comm_lo, comm_hi] wired with probability p_in, plus a fraction of
// random global edges; vertex ids are shuffled so structure does not align
// with the id order.
Graph social_like(int n, int comm_lo, int comm_hi, double p_in, double global_frac,
                  std::uint64_t seed);

}  // namespace kdc2::testgen
