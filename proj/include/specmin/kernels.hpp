#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "specmin/graph_ops.hpp"
#include "specmin/main_trees.hpp"
#include "specmin/spectral.hpp"

namespace specmin {

struct KernelProblem {
  int k = 1;
  int r = 0;
  int n0 = 1;
  int total_leaves = 0;
  int lbar = 0;
};

// n0 = 3k^2 - k - 1 - (k-1)r, total_leaves = n0 - 2k + 1, lbar = total_leaves / k.
KernelProblem make_kernel_problem(int k, int r);

// [lo, hi] for l(u), lo clamped at 0. Throws GraphError when u is not in V2*.
std::pair<int, int> leaf_bounds(const KernelProblem& p, const MainTree& mt, Vertex u);

// Leaf counts listed in V2* order (ascending vertex index).
using LeafSequence = std::vector<int>;

LeafAssignment to_assignment(const MainTree& mt, const LeafSequence& seq);

// All feasible sequences, one per orbit of Aut(main tree), each orbit
// represented by its lexicographically smallest member; lexicographic order.
std::vector<LeafSequence> enumerate_leaf_sequences(const KernelProblem& p, const MainTree& mt);

struct KernelCandidate {
  int main_index = 0;  // position in enumerate_main_trees(k), 0-based
  LeafSequence sequence;
  Graph tree;
  RadiusCertificate certificate;
  std::string canonical;
};

struct MainTreeSummary {
  MainTree main_tree;
  long count = 0;
  std::vector<KernelCandidate> best;  // exact per-tree minima, ties kept
};

struct KernelResult {
  KernelProblem problem;
  std::vector<MainTreeSummary> per_main_tree;
  std::vector<KernelCandidate> minimizers;  // global exact minima, canonical order
};

inline constexpr int kKernelExhaustiveCap = 7;
inline constexpr double kScreenMargin = 1e-6;

// jobs <= 0 means hardware concurrency.
KernelResult kernel_search(int k, int r, int jobs = 1, double tol = 1e-12);

nlohmann::json to_json(const KernelResult& r);
nlohmann::json to_json(const KernelCandidate& c, bool with_certificate = true);

}  // namespace specmin
