#include "specmin/canonical.hpp"

#include <algorithm>
#include <map>

namespace specmin {
namespace {

std::vector<Vertex> centroids(const Graph& t) {
  const int n = t.vertex_count();
  std::vector<Vertex> order, parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : t.neighbors(u))
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  parent[0] = -1;
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (Vertex w : t.neighbors(v))
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

std::string encode(const Graph& t, Vertex root, Vertex blocked, std::span<const int> colors) {
  // Iterative post-order so deep paths do not exhaust the stack.
  const int n = t.vertex_count();
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2), order;
  std::vector<Vertex> stack{root};
  parent[root] = -1;
  if (blocked >= 0) parent[blocked] = -3;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : t.neighbors(u))
      if (parent[w] == -2) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<std::vector<std::string>> kids(static_cast<std::size_t>(n));
  std::vector<std::string> code(static_cast<std::size_t>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    auto& ch = kids[u];
    std::sort(ch.begin(), ch.end());
    std::string s = "(";
    if (!colors.empty()) s += std::to_string(colors[u]) + ":";
    for (auto& c : ch) s += c;
    s += ")";
    ch.clear();
    ch.shrink_to_fit();
    if (parent[u] >= 0)
      kids[parent[u]].push_back(std::move(s));
    else
      code[u] = std::move(s);
  }
  return code[root];
}

std::string tree_code(const Graph& tree, std::span<const int> colors) {
  if (!tree.is_tree()) throw GraphError("canonical_form: input is not a tree");
  if (!colors.empty() && static_cast<int>(colors.size()) != tree.vertex_count())
    throw GraphError("canonical_form: colour vector has the wrong length");
  auto cs = centroids(tree);
  if (cs.size() == 1) return "V" + encode(tree, cs[0], -1, colors);
  auto a = encode(tree, cs[0], cs[1], colors);
  auto b = encode(tree, cs[1], cs[0], colors);
  if (b < a) std::swap(a, b);
  return "E" + a + b;
}

// ---- small general graphs -------------------------------------------------

using Cells = std::vector<std::vector<int>>;

struct SmallCanon {
  int n;
  std::vector<std::uint32_t> nbr;
  std::uint64_t best = 0;
  bool have = false;

  bool twins(int u, int v) const {
    return (nbr[u] & ~(1u << v)) == (nbr[v] & ~(1u << u));
  }

  void refine(Cells& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      Cells next;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v : cell) {
          std::vector<int> counts(cells.size(), 0);
          for (std::uint32_t m = nbr[v]; m; m &= m - 1) ++counts[cell_of[__builtin_ctz(m)]];
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> cur{sig[0].second};
        for (std::size_t i = 1; i < sig.size(); ++i) {
          if (sig[i].first != sig[i - 1].first) {
            next.push_back(cur);
            cur.clear();
          }
          cur.push_back(sig[i].second);
        }
        next.push_back(cur);
      }
      bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::uint64_t code_of(const Cells& cells) const {
    std::vector<int> perm;
    for (auto& c : cells) perm.push_back(c[0]);
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | ((nbr[perm[i]] >> perm[j]) & 1u);
    return code;
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    if (target == cells.size()) {
      auto code = code_of(cells);
      if (!have || code > best) best = code;
      have = true;
      return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells child;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(rest);
      }
      search(std::move(child));
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& tree) { return tree_code(tree, {}); }

std::string canonical_form(const Graph& tree, std::span<const int> colors) { return tree_code(tree, colors); }

std::uint64_t small_graph_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kSmallCanonicalCap) throw GraphError("small_graph_code: graph too large");
  SmallCanon sc{n, std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) sc.nbr[v] |= 1u << w;
  if (n <= 1) return 0;
  Cells all(1);
  for (int v = 0; v < n; ++v) all[0].push_back(v);
  sc.search(std::move(all));
  return sc.best;
}

Graph graph_from_small_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2 - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --bit)
      if ((code >> bit) & 1u) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

bool is_w_graph(const Graph& g) {
  if (g.vertex_count() < 6 || !g.is_tree()) return false;
  return canonical_form(g) == canonical_form(w_graph(g.vertex_count()));
}

}  // namespace specmin
