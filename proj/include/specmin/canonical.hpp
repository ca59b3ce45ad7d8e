#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "specmin/graph.hpp"

namespace specmin {

// AHU encoding rooted at the centroid (or the central edge when there are
// two centroids). Equal strings iff the trees are isomorphic.
std::string canonical_form(const Graph& tree);

// Same, for vertex-coloured trees: isomorphisms must preserve `colors`.
std::string canonical_form(const Graph& tree, std::span<const int> colors);

// Canonical adjacency code for small general graphs (n <= 11): the
// lexicographically largest upper-triangle bit string over all labelings
// reachable by individualisation-refinement. Equal codes iff isomorphic.
inline constexpr int kSmallCanonicalCap = 11;
std::uint64_t small_graph_code(const Graph& g);
// Inverse of small_graph_code for a known vertex count.
Graph graph_from_small_code(int n, std::uint64_t code);

// Isomorphism test against W_n (two pendant pairs at the ends of a path).
bool is_w_graph(const Graph& g);

}  // namespace specmin
