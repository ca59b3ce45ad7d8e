#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "specmin/graph.hpp"
#include "specmin/main_trees.hpp"
#include "specmin/spectral.hpp"

namespace specmin {

inline constexpr int kFreeTreeCap = 18;
inline constexpr int kConnectedCap = 9;

enum class TreeGenerator { LevelSequence, LeafAugmentation };

// Each unlabeled tree on n vertices exactly once. LevelSequence walks rooted
// level sequences in successor order and keeps the centroid-rooted ones;
// LeafAugmentation grows trees one leaf at a time with canonical dedup.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& fn,
                        TreeGenerator gen = TreeGenerator::LevelSequence);
std::vector<Graph> enumerate_free_trees(int n, TreeGenerator gen = TreeGenerator::LevelSequence);

// Connected graphs up to isomorphism, grown vertex by vertex and deduplicated
// by small_graph_code. Materialised (n <= 9 keeps this at a few MB).
std::vector<Graph> enumerate_connected_graphs(int n);

enum class SearchSpace { Trees, Connected };

struct OracleMinimizer {
  Graph graph;
  RadiusCertificate certificate;
  bool is_tree = false;
};

struct OracleResult {
  int n = 0, alpha = 0;
  SearchSpace space = SearchSpace::Trees;
  long search_space_size = 0;  // candidates examined
  long class_size = 0;         // candidates with the requested alpha
  long escalations = 0;        // near-ties re-run at higher precision
  std::vector<OracleMinimizer> minimizers;  // canonical order
};

OracleResult brute_force_minimizer(int n, int alpha, SearchSpace space, double tol = 1e-12);

struct AuditReport {
  std::map<std::string, int> passed;
  std::map<std::string, int> failed;
  std::vector<std::string> failures;  // "check: graph6 (detail)"
  bool ok() const { return failures.empty(); }
};

AuditReport audit_structural_propositions(const OracleResult& result);

nlohmann::json to_json(const OracleResult& r);
nlohmann::json to_json(const AuditReport& a);

}  // namespace specmin
