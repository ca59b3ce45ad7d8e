#include "specmin/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace specmin {
namespace {

bool is_path(const Graph& g) {
  if (!g.is_tree()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

// Post-order of a tree rooted at 0, with parents.
void root_tree(const Graph& t, std::vector<Vertex>& order, std::vector<Vertex>& parent) {
  const int n = t.vertex_count();
  parent.assign(static_cast<std::size_t>(n), -1);
  order.clear();
  order.reserve(static_cast<std::size_t>(n));
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
  std::reverse(order.begin(), order.end());
  parent[0] = -1;
}

std::vector<Vertex> tree_witness(const Graph& t) {
  const int n = t.vertex_count();
  if (n == 1) return {0};
  std::vector<Vertex> chosen;
  if (is_path(t) && n % 2 == 0) {
    Vertex start = t.leaves().front();
    Vertex prev = -1, at = start;
    for (int i = 0; i < n; ++i) {
      if (i % 2 == 0) chosen.push_back(at);
      Vertex next = -1;
      for (Vertex w : t.neighbors(at))
        if (w != prev) next = w;
      prev = at;
      at = next;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;

  auto take = [&](Vertex v) {
    chosen.push_back(v);
    removed[v] = 1;
    for (Vertex w : t.neighbors(v)) {
      if (removed[w]) continue;
      removed[w] = 1;
      for (Vertex x : t.neighbors(w))
        if (!removed[x] && --deg[x] <= 1) ready.push(x);
    }
  };
  // Original leaves first so that L(T) lands in the witness.
  for (Vertex v : t.leaves())
    if (!removed[v]) take(v);
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v] && deg[v] <= 1) ready.push(v);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    if (!removed[v]) take(v);
  }
  // Any leftover would be isolated-by-removal vertices; the loop above
  // already consumes them since their degree drops to zero.
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct BranchAndBound {
  const std::vector<std::uint32_t>& nbr;
  int best = 0;
  std::uint32_t best_set = 0;

  void search(std::uint32_t cand, std::uint32_t current, int size) {
    if (cand == 0) {
      if (size > best) {
        best = size;
        best_set = current;
      }
      return;
    }
    if (size + std::popcount(cand) <= best) return;
    // Vertices with at most one candidate neighbour can always be taken.
    for (std::uint32_t rest = cand; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (std::popcount(nbr[v] & cand) <= 1) {
        search(cand & ~(nbr[v] | (1u << v)), current | (1u << v), size + 1);
        return;
      }
    }
    int pivot = -1, pivot_deg = -1;
    for (std::uint32_t rest = cand; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(nbr[v] & cand);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    search(cand & ~(nbr[pivot] | (1u << pivot)), current | (1u << pivot), size + 1);
    search(cand & ~(1u << pivot), current, size);
  }
};

}  // namespace

int tree_independence_number(const Graph& tree) {
  if (!tree.is_tree()) throw GraphError("tree_independence_number: input is not a tree");
  std::vector<Vertex> order, parent;
  root_tree(tree, order, parent);
  std::vector<int> in(static_cast<std::size_t>(tree.vertex_count()), 1), out(in.size(), 0);
  for (Vertex u : order) {
    if (parent[u] < 0) continue;
    in[parent[u]] += out[u];
    out[parent[u]] += std::max(in[u], out[u]);
  }
  return std::max(in[0], out[0]);
}

std::vector<Vertex> leaf_set(const Graph& tree) {
  if (is_path(tree) && tree.vertex_count() % 2 == 0) return {tree.leaves().front()};
  return tree.leaves();
}

IndependenceResult independence_number(const Graph& g) {
  if (!g.is_connected()) throw GraphError("independence_number: graph is disconnected");
  if (g.is_tree()) {
    IndependenceResult r;
    r.alpha = tree_independence_number(g);
    r.witness = tree_witness(g);
    return r;
  }
  const int n = g.vertex_count();
  if (n > kExactIndependenceCap)
    throw GraphError("independence_number: general graphs are capped at " + std::to_string(kExactIndependenceCap) +
                     " vertices");
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1u << w;
  BranchAndBound bb{nbr};
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  bb.search(all, 0, 0);
  IndependenceResult r;
  r.alpha = bb.best;
  for (Vertex v = 0; v < n; ++v)
    if (bb.best_set & (1u << v)) r.witness.push_back(v);
  return r;
}

}  // namespace specmin
