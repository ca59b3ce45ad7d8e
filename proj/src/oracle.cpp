#include "specmin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>
#include <unordered_set>

#include "specmin/canonical.hpp"
#include "specmin/independence.hpp"
#include "specmin/io.hpp"

namespace specmin {

namespace {

Graph from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<Edge> edges;
  std::vector<Vertex> last(static_cast<std::size_t>(n), -1);
  last[0] = 0;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(last[static_cast<std::size_t>(level[i] - 1)], i);
    last[static_cast<std::size_t>(level[i])] = i;
  }
  return Graph::from_edges(n, edges);
}

// AHU string of the rooted subtree occupying level[begin, end).
std::string rooted_code(const std::vector<int>& level, int begin, int end) {
  std::vector<std::string> kids;
  for (int i = begin + 1; i < end;) {
    int j = i + 1;
    while (j < end && level[j] > level[i]) ++j;
    kids.push_back(rooted_code(level, i, j));
    i = j;
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

// True when the level sequence is rooted at the centroid; for two centroids
// only the rooting whose root half has the larger code is kept.
bool centroid_rooted(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  int heavy_begin = -1, heavy_end = -1, heavy = 0;
  for (int i = 1; i < n;) {
    int j = i + 1;
    while (j < n && level[j] > level[i]) ++j;
    if (j - i > heavy) {
      heavy = j - i;
      heavy_begin = i;
      heavy_end = j;
    }
    i = j;
  }
  if (2 * heavy < n) return true;
  if (2 * heavy > n) return false;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i < heavy_begin || i >= heavy_end) rest.push_back(level[i]);
  return rooted_code(rest, 0, static_cast<int>(rest.size())) >= rooted_code(level, heavy_begin, heavy_end);
}

void level_sequence_trees(int n, const std::function<void(const Graph&)>& fn) {
  std::vector<int> level(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) level[i] = i;
  while (true) {
    if (centroid_rooted(level)) fn(from_levels(level));
    int p = n - 1;
    while (p > 0 && level[p] <= 1) --p;
    if (p == 0) return;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - p + q];
  }
}

std::vector<Graph> leaf_augmented_trees(int n) {
  std::vector<Graph> current{Graph::from_edges(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& t : current) {
      auto edges = t.edges();
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        auto e = edges;
        e.emplace_back(v, m - 1);
        Graph g = Graph::from_edges(m, e);
        next.try_emplace(canonical_form(g), std::move(g));
      }
    }
    current.clear();
    for (auto& [form, g] : next) current.push_back(std::move(g));
  }
  return current;
}

void check_tree_cap(int n) {
  if (n < 1 || n > kFreeTreeCap) throw GraphError("free tree enumeration: n must lie in [1, " + std::to_string(kFreeTreeCap) + "]");
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const Graph&)>& fn, TreeGenerator gen) {
  check_tree_cap(n);
  if (gen == TreeGenerator::LevelSequence) {
    level_sequence_trees(n, fn);
    return;
  }
  for (const auto& g : leaf_augmented_trees(n)) fn(g);
}

std::vector<Graph> enumerate_free_trees(int n, TreeGenerator gen) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& g) { out.push_back(g); }, gen);
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > kConnectedCap)
    throw GraphError("connected graph enumeration: n must lie in [1, " + std::to_string(kConnectedCap) + "]");
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(mutex);
  if (!cache.count(1)) cache[1] = {0};
  for (int m = 2; m <= n; ++m) {
    if (cache.count(m)) continue;
    std::unordered_set<std::uint64_t> codes;
    for (std::uint64_t parent : cache[m - 1]) {
      Graph base = graph_from_small_code(m - 1, parent);
      auto edges = base.edges();
      for (std::uint32_t mask = 1; mask < (1u << (m - 1)); ++mask) {
        auto e = edges;
        for (int v = 0; v < m - 1; ++v)
          if (mask >> v & 1u) e.emplace_back(v, m - 1);
        codes.insert(small_graph_code(Graph::from_edges(m, e)));
      }
    }
    std::vector<std::uint64_t> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    cache[m] = std::move(sorted);
  }
  std::vector<Graph> out;
  for (std::uint64_t c : cache[n]) out.push_back(graph_from_small_code(n, c));
  return out;
}

// ---- brute force -----------------------------------------------------------

namespace {

constexpr double kTreeMargin = 1e-6;
constexpr double kGraphMargin = 1e-8;

struct Near {
  Graph g;
  double rho;
  bool tree;
};

void offer(std::vector<Near>& near, double& best, Near cand, double margin) {
  if (cand.rho > best + margin) return;
  if (cand.rho < best) {
    best = cand.rho;
    std::erase_if(near, [&](const Near& x) { return x.rho > best + margin; });
  }
  near.push_back(std::move(cand));
}

std::string order_key(const OracleMinimizer& m) {
  if (m.is_tree) return "T" + canonical_form(m.graph);
  return "G" + to_graph6(m.graph);
}

}  // namespace

OracleResult brute_force_minimizer(int n, int alpha, SearchSpace space, double tol) {
  if (alpha < 1 || alpha > n - 1) {
    if (!(n == 1 && alpha == 1)) throw GraphError("brute_force_minimizer: no connected graph has this independence number");
  }
  OracleResult res;
  res.n = n;
  res.alpha = alpha;
  res.space = space;
  std::vector<Near> near;
  double best = INFINITY;

  if (space == SearchSpace::Trees) {
    for_each_free_tree(n, [&](const Graph& t) {
      ++res.search_space_size;
      if (tree_independence_number(t) != alpha) return;
      ++res.class_size;
      offer(near, best, {t, tree_radius_numeric(t), true}, kTreeMargin);
    });
  } else {
    for (const auto& g : enumerate_connected_graphs(n)) {
      ++res.search_space_size;
      if (independence_number(g).alpha != alpha) continue;
      ++res.class_size;
      bool tree = g.is_tree();
      double rho = tree ? tree_radius_numeric(g) : power_iteration(g, 1e-10).value;
      offer(near, best, {g, rho, tree}, kGraphMargin);
    }
  }
  if (near.empty()) throw GraphError("brute_force_minimizer: the class is empty");

  // Trees are settled exactly; any non-tree near the minimum is re-run at
  // higher precision before it may count as a minimizer.
  std::vector<OracleMinimizer> exact, numeric;
  for (auto& c : near) {
    OracleMinimizer m;
    m.graph = c.g;
    m.is_tree = c.tree;
    if (c.tree) {
      m.certificate = certify_largest_root(char_poly_tree(c.g), c.rho, tol);
      exact.push_back(std::move(m));
    } else {
      ++res.escalations;
      PowerIteration pi = power_iteration(c.g, 1e-13);
      m.certificate.lo = Dyadic::from_double(pi.lower);
      m.certificate.hi = Dyadic::from_double(pi.upper);
      m.certificate.approx = pi.value;
      numeric.push_back(std::move(m));
    }
  }
  std::vector<OracleMinimizer> mins;
  for (auto& m : exact) {
    if (mins.empty()) {
      mins.push_back(std::move(m));
      continue;
    }
    auto ord = compare_radii(m.certificate, mins.front().certificate);
    if (ord < 0) mins.clear();
    if (ord <= 0) mins.push_back(std::move(m));
  }
  for (auto& m : numeric) {
    double ref = mins.empty() ? INFINITY : mins.front().certificate.approx;
    if (m.certificate.approx < ref - 1e-12) {
      mins.clear();
      mins.push_back(std::move(m));
    } else if (std::abs(m.certificate.approx - ref) <= 1e-12) {
      mins.push_back(std::move(m));
    }
  }
  std::sort(mins.begin(), mins.end(),
            [](const OracleMinimizer& a, const OracleMinimizer& b) { return order_key(a) < order_key(b); });
  res.minimizers = std::move(mins);
  return res;
}

AuditReport audit_structural_propositions(const OracleResult& result) {
  AuditReport rep;
  auto fail = [&](const std::string& check, const Graph& g, const std::string& detail) {
    ++rep.failed[check];
    rep.failures.push_back(check + ": " + to_graph6(g) + (detail.empty() ? "" : " (" + detail + ")"));
  };
  for (const auto& m : result.minimizers) {
    if (!m.is_tree) {
      fail("tree", m.graph, "minimizer is not a tree");
      continue;
    }
    ++rep.passed["tree"];
    auto report = validate_structure(parity_tree(m.graph));
    for (const auto& c : report.checks) {
      if (c.name == "tree") continue;
      if (c.passed)
        ++rep.passed[c.name];
      else
        fail(c.name, m.graph, c.detail);
    }
    const int k = result.n - result.alpha;
    if (m.graph.diameter() <= 2 * k)
      ++rep.passed["diameter-bound"];
    else
      fail("diameter-bound", m.graph, "diam > 2(n - alpha)");
  }
  return rep;
}

nlohmann::json to_json(const OracleResult& r) {
  nlohmann::json mins = nlohmann::json::array();
  for (const auto& m : r.minimizers)
    mins.push_back({{"graph6", to_graph6(m.graph)},
                    {"tree", m.is_tree},
                    {"rho", m.certificate.approx},
                    {"certificate", to_json(m.certificate)}});
  return {{"n", r.n},
          {"alpha", r.alpha},
          {"space", r.space == SearchSpace::Trees ? "trees" : "connected"},
          {"search_space_size", r.search_space_size},
          {"class_size", r.class_size},
          {"escalations", r.escalations},
          {"minimizers", mins}};
}

nlohmann::json to_json(const AuditReport& a) {
  nlohmann::json checks = nlohmann::json::object();
  std::set<std::string> names;
  for (auto& [k, v] : a.passed) names.insert(k);
  for (auto& [k, v] : a.failed) names.insert(k);
  for (const auto& name : names) {
    int p = a.passed.count(name) ? a.passed.at(name) : 0;
    int f = a.failed.count(name) ? a.failed.at(name) : 0;
    checks[name] = {{"passed", p}, {"failed", f}};
  }
  return {{"ok", a.ok()}, {"checks", checks}, {"failures", a.failures}};
}

}  // namespace specmin
