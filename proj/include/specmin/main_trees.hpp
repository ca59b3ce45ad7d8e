#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "specmin/graph.hpp"

namespace specmin {

// A tree with its leaf set L(T) and the bipartition of T - L(T) into odd
// (V1*) and even (V2*) vertices. All lists ascending.
struct ParityTree {
  Graph tree;
  std::vector<Vertex> leaf_set;
  std::vector<Vertex> odd_set;
  std::vector<Vertex> even_set;
};

// Derives the parity classes of a full tree: L(T) by the leaf convention,
// the even side is the side of T - L(T) holding its leaves.
ParityTree parity_tree(const Graph& tree);

// T(d; M_1..M_h; σ*). levels[s][j] is the target of the j-th matched edge
// of level s+1: for level 1 an index i meaning path vertex v_{2i}
// (1 <= i <= d/2 - 1), otherwise the index of an edge of the previous level
// whose y endpoint it hangs from.
struct MainTreeDescriptor {
  int k = 1;
  int d = 0;
  std::vector<std::vector<int>> levels;

  friend auto operator<=>(const MainTreeDescriptor&, const MainTreeDescriptor&) = default;
};

struct MainTree {
  MainTreeDescriptor desc;
  ParityTree realized;     // leaf_set is empty
  std::string canonical;   // canonical_form of realized.tree
};

// Vertex layout: v_0..v_d are 0..d, then x_{11}, y_{11}, x_{12}, y_{12}, ...
// level by level. Throws GraphError for targets out of range or when the
// vertex counts contradict k.
MainTree realize_main_tree(const MainTreeDescriptor& desc);

inline constexpr int kMainTreeCap = 10;
// Non-isomorphic main trees for k, ordered by d and then by their smallest
// descriptor (F^k_1, F^k_2, ... in figure order).
std::vector<MainTree> enumerate_main_trees(int k);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  int h = 0;  // number of levels found off the diameter path
  bool ok() const;
  const ValidationCheck* failed() const;
};

// Structural checks for a main tree (empty leaf_set) or a full minimizer
// candidate. Never throws on a malformed candidate; failures are entries.
ValidationReport validate_structure(const ParityTree& t);

nlohmann::json to_json(const MainTreeDescriptor& d);
nlohmann::json to_json(const ValidationReport& r);

}  // namespace specmin
