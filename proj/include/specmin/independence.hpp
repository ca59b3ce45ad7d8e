#pragma once

#include <vector>

#include "specmin/graph.hpp"

namespace specmin {

struct IndependenceResult {
  int alpha = 0;
  // One maximum independent set, ascending. For trees it contains every
  // leaf of L(T); for even paths L(P_2t) is the lower-index end only.
  std::vector<Vertex> witness;
};

inline constexpr int kExactIndependenceCap = 24;

// α(g) for connected g. Trees use dynamic programming (any size); other
// graphs use exact branch and bound up to kExactIndependenceCap vertices.
IndependenceResult independence_number(const Graph& g);

// Linear-time tree DP on its own, without the witness.
int tree_independence_number(const Graph& tree);

// L(T): all leaves, except that an even path keeps only its lower-index end.
std::vector<Vertex> leaf_set(const Graph& tree);

}  // namespace specmin
