#include "specmin/main_trees.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "specmin/canonical.hpp"
#include "specmin/graph_ops.hpp"
#include "specmin/independence.hpp"

namespace specmin {

ParityTree parity_tree(const Graph& tree) {
  if (!tree.is_tree()) throw GraphError("parity_tree: input is not a tree");
  ParityTree pt;
  pt.tree = tree;
  const int n = tree.vertex_count();
  if (n > 1) pt.leaf_set = leaf_set(tree);
  std::vector<char> is_leaf(static_cast<std::size_t>(n), 0);
  for (Vertex v : pt.leaf_set) is_leaf[v] = 1;

  Vertex start = -1;
  for (Vertex v = 0; v < n && start < 0; ++v)
    if (!is_leaf[v]) start = v;
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue{start};
  colour[start] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : tree.neighbors(u))
      if (!is_leaf[w] && colour[w] < 0) {
        colour[w] = 1 - colour[u];
        queue.push_back(w);
      }
  }
  // The even side is the one holding the first leaf of T - L(T).
  int even = colour[start];
  for (Vertex v = 0; v < n; ++v) {
    if (is_leaf[v]) continue;
    int inner = 0;
    for (Vertex w : tree.neighbors(v)) inner += !is_leaf[w];
    if (inner <= 1) {
      even = colour[v];
      break;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_leaf[v]) continue;
    (colour[v] == even ? pt.even_set : pt.odd_set).push_back(v);
  }
  return pt;
}

MainTree realize_main_tree(const MainTreeDescriptor& desc) {
  if (desc.k < 1) throw GraphError("main tree: k must be positive");
  if (desc.d < 0 || desc.d % 2 != 0) throw GraphError("main tree: d must be even and nonnegative");
  int matched = 0;
  for (const auto& level : desc.levels) matched += static_cast<int>(level.size());
  if (matched != desc.k - 1 - desc.d / 2) throw GraphError("main tree: level sizes do not sum to k-1-d/2");

  const int n = desc.d + 1 + 2 * matched;
  std::vector<Edge> edges;
  std::vector<Vertex> odd, even;
  for (int i = 0; i < desc.d; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i <= desc.d; ++i) (i % 2 ? odd : even).push_back(i);

  Vertex next = desc.d + 1;
  std::vector<Vertex> prev_y;
  for (std::size_t s = 0; s < desc.levels.size(); ++s) {
    if (desc.levels[s].empty()) throw GraphError("main tree: empty level");
    std::vector<Vertex> ys;
    for (int target : desc.levels[s]) {
      Vertex host;
      if (s == 0) {
        if (target < 1 || target > desc.d / 2 - 1) throw GraphError("main tree: level-1 target out of range");
        host = 2 * target;
      } else {
        if (target < 0 || target >= static_cast<int>(prev_y.size())) throw GraphError("main tree: level target out of range");
        host = prev_y[static_cast<std::size_t>(target)];
      }
      Vertex x = next++, y = next++;
      edges.emplace_back(host, x);
      edges.emplace_back(x, y);
      odd.push_back(x);
      even.push_back(y);
      ys.push_back(y);
    }
    prev_y = std::move(ys);
  }
  MainTree mt;
  mt.desc = desc;
  mt.realized.tree = Graph::from_edges(n, edges);
  std::sort(odd.begin(), odd.end());
  std::sort(even.begin(), even.end());
  mt.realized.odd_set = std::move(odd);
  mt.realized.even_set = std::move(even);
  mt.canonical = canonical_form(mt.realized.tree);
  return mt;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Nondecreasing target sequences, level by level.
void assign_targets(const std::vector<int>& sizes, std::size_t level, int level1_max, MainTreeDescriptor& desc,
                    std::vector<MainTreeDescriptor>& out) {
  if (level == sizes.size()) {
    out.push_back(desc);
    return;
  }
  const int lo = level == 0 ? 1 : 0;
  const int hi = level == 0 ? level1_max : static_cast<int>(desc.levels[level - 1].size()) - 1;
  std::vector<int> seq(static_cast<std::size_t>(sizes[level]), lo);
  if (hi < lo) return;
  while (true) {
    desc.levels.push_back(seq);
    assign_targets(sizes, level + 1, level1_max, desc, out);
    desc.levels.pop_back();
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == hi) --i;
    if (i < 0) break;
    int v = seq[static_cast<std::size_t>(i)] + 1;
    for (std::size_t j = static_cast<std::size_t>(i); j < seq.size(); ++j) seq[j] = v;
  }
}

}  // namespace

std::vector<MainTree> enumerate_main_trees(int k) {
  if (k < 1) throw GraphError("enumerate_main_trees: k must be positive");
  if (k > kMainTreeCap) throw GraphError("enumerate_main_trees: k above cap " + std::to_string(kMainTreeCap));
  std::vector<int> ds;
  if (k <= 2)
    ds.push_back(2 * k - 2);
  else
    for (int d = 4; d <= 2 * k - 2; d += 2) ds.push_back(d);

  std::map<std::string, MainTree> by_form;
  for (int d : ds) {
    const int m = k - 1 - d / 2;
    std::vector<MainTreeDescriptor> descs;
    MainTreeDescriptor base{k, d, {}};
    if (m == 0) descs.push_back(base);
    for (int h = 1; h <= std::min(m, d / 4); ++h) {
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions(m, h, cur, comps);
      for (const auto& sizes : comps) assign_targets(sizes, 0, d / 2 - 1, base, descs);
    }
    for (const auto& desc : descs) {
      MainTree mt = realize_main_tree(desc);
      if (mt.realized.tree.diameter() != d) continue;
      auto it = by_form.find(mt.canonical);
      if (it == by_form.end())
        by_form.emplace(mt.canonical, std::move(mt));
      else if (desc < it->second.desc)
        it->second = std::move(mt);
    }
  }
  std::vector<MainTree> out;
  for (auto& [form, mt] : by_form) out.push_back(std::move(mt));
  std::sort(out.begin(), out.end(), [](const MainTree& a, const MainTree& b) { return a.desc < b.desc; });
  return out;
}

// ---- validation ------------------------------------------------------------

bool ValidationReport::ok() const { return failed() == nullptr; }

const ValidationCheck* ValidationReport::failed() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

bool is_path_graph(const Graph& g) {
  if (!g.is_tree()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

std::vector<Vertex> diameter_path(const Graph& t) {
  auto far_from = [&](Vertex s) {
    auto d = t.distances_from(s);
    return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
  };
  Vertex a = far_from(0), b = far_from(a);
  auto da = t.distances_from(a);
  std::vector<Vertex> path{b};
  while (path.back() != a) {
    Vertex at = path.back();
    for (Vertex w : t.neighbors(at))
      if (da[w] == da[at] - 1) {
        path.push_back(w);
        break;
      }
  }
  return path;
}

}  // namespace

ValidationReport validate_structure(const ParityTree& t) {
  ValidationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const Graph& g = t.tree;
  const int n = g.vertex_count();
  if (!g.is_tree()) {
    add("tree", false, "not connected and acyclic");
    return rep;
  }
  add("tree", true);

  std::vector<int> cls(static_cast<std::size_t>(n), -1);  // 0 leaf, 1 odd, 2 even
  bool partition_ok = true;
  auto mark = [&](const std::vector<Vertex>& set, int c) {
    for (Vertex v : set) {
      if (v < 0 || v >= n || cls[v] != -1)
        partition_ok = false;
      else
        cls[v] = c;
    }
  };
  mark(t.leaf_set, 0);
  mark(t.odd_set, 1);
  mark(t.even_set, 2);
  partition_ok = partition_ok && std::none_of(cls.begin(), cls.end(), [](int c) { return c < 0; });
  if (!partition_ok) {
    add("partition", false, "leaf, odd and even sets do not partition the vertices");
    return rep;
  }
  bool independent = true;
  for (auto [u, v] : g.edges())
    if (cls[u] == cls[v] && cls[u] != 0) independent = false;
  add("partition", independent, independent ? "" : "odd or even class is not independent");

  bool leaves_ok = true;
  for (Vertex v : t.leaf_set)
    if (g.degree(v) != 1 || cls[g.neighbors(v)[0]] != 2) leaves_ok = false;
  add("leaves-at-even-vertices", leaves_ok, leaves_ok ? "" : "a pendant vertex hangs off a non-even vertex");

  Graph main_part = induced_subgraph(g, [&] {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (cls[v] != 0) keep.push_back(v);
    return keep;
  }());
  std::vector<Vertex> main_ids;
  for (Vertex v = 0; v < n; ++v)
    if (cls[v] != 0) main_ids.push_back(v);
  if (!main_part.is_tree()) {
    add("main-part", false, "T - L(T) is not a tree");
    return rep;
  }
  const int d = main_part.diameter();
  bool control_even = true;
  for (Vertex v = 0; v < main_part.vertex_count(); ++v)
    if (main_part.degree(v) <= 1 && cls[main_ids[v]] != 2) control_even = false;
  add("even-control-path", control_even && d % 2 == 0, "diam(T - L(T)) = " + std::to_string(d));

  bool odd_deg = true;
  for (Vertex v : t.odd_set)
    if (g.degree(v) != 2) odd_deg = false;
  add("odd-degree-2", odd_deg);

  const int k = static_cast<int>(t.even_set.size());
  add("counts", static_cast<int>(t.odd_set.size()) == k - 1,
      "|V2*| = " + std::to_string(k) + ", |V1*| = " + std::to_string(t.odd_set.size()));

  if (!t.leaf_set.empty()) {
    const int alpha = tree_independence_number(g);
    const int leaves = static_cast<int>(t.leaf_set.size());
    add("independence", alpha == n - k && leaves == 2 * alpha - n + 1,
        "alpha = " + std::to_string(alpha) + ", |L| = " + std::to_string(leaves));
    const int diam = g.diameter();
    const int half = (n + 1) / 2;
    bool ok = diam <= 2 * (n - alpha);
    std::string rule = "diam = " + std::to_string(diam);
    if (is_path_graph(g)) {
      ok = ok && alpha == half;
    } else if (diam % 2 != 0) {
      ok = false;
    } else if (alpha == n - 1) {
      ok = ok && diam == 2;
    } else if (alpha == n - 2 && n >= 5) {
      ok = ok && diam == 4;
    } else if (alpha == half) {
      ok = false;  // only the path attains alpha = ceil(n/2)
    } else if (alpha >= half + 1 && alpha <= n - 3) {
      ok = ok && diam >= 6;
    }
    add("diameter", ok, rule);
  }

  // Level decomposition: H = (T - L(T)) minus a diameter path must have a
  // perfect matching whose pairs sit at distances 2s-1, 2s from the path.
  const int mn = main_part.vertex_count();
  if (mn == 1) {
    add("level-decomposition", true, "h = 0");
    return rep;
  }
  auto path = diameter_path(main_part);
  std::vector<int> dist(static_cast<std::size_t>(mn), -1);
  std::deque<Vertex> queue;
  for (Vertex v : path) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : main_part.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  std::vector<int> deg(static_cast<std::size_t>(mn), 0), mate(static_cast<std::size_t>(mn), -1);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < mn; ++v) {
    if (dist[v] == 0) continue;
    for (Vertex w : main_part.neighbors(v)) deg[v] += dist[w] > 0;
    if (deg[v] <= 1) stack.push_back(v);
  }
  bool matching = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (mate[v] >= 0) continue;
    Vertex partner = -1;
    for (Vertex w : main_part.neighbors(v))
      if (dist[w] > 0 && mate[w] < 0) partner = w;
    if (partner < 0) {
      matching = false;
      break;
    }
    mate[v] = partner;
    mate[partner] = v;
    for (Vertex w : main_part.neighbors(partner))
      if (dist[w] > 0 && mate[w] < 0 && --deg[w] <= 1) stack.push_back(w);
  }
  int h = 0;
  for (Vertex v = 0; v < mn && matching; ++v) {
    if (dist[v] == 0) continue;
    if (mate[v] < 0) {
      matching = false;
      break;
    }
    Vertex x = dist[v] % 2 ? v : mate[v], y = mate[x];
    if (dist[x] % 2 != 1 || dist[y] != dist[x] + 1) matching = false;
    h = std::max(h, (dist[v] + 1) / 2);
  }
  rep.h = h;
  const int bound = std::min(k - 1 - d / 2, d / 4);
  add("level-decomposition", matching && (h == 0 || h <= bound),
      "h = " + std::to_string(h) + (matching ? "" : ", no perfect matching off the diameter path"));
  return rep;
}

nlohmann::json to_json(const MainTreeDescriptor& d) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t s = 0; s < d.levels.size(); ++s) {
    nlohmann::json edges = nlohmann::json::array();
    for (int t : d.levels[s])
      edges.push_back({{"target", s == 0 ? "v" + std::to_string(2 * t) : "y" + std::to_string(s) + "," + std::to_string(t + 1)}});
    levels.push_back({{"edges", edges}});
  }
  return {{"k", d.k}, {"d", d.d}, {"levels", levels}};
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : r.checks) checks[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
  return {{"ok", r.ok()}, {"h", r.h}, {"checks", checks}};
}

}  // namespace specmin
