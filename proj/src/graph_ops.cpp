#include "specmin/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace specmin {

Graph attach_leaves(const Graph& g, const LeafAssignment& counts) {
  auto edges = g.edges();
  int next = g.vertex_count();
  for (auto [host, count] : counts) {
    if (host < 0 || host >= g.vertex_count())
      throw GraphError("attach_leaves: unknown host vertex " + std::to_string(host));
    if (count < 0) throw GraphError("attach_leaves: negative leaf count");
    for (int i = 0; i < count; ++i) edges.emplace_back(host, next++);
  }
  return Graph::from_edges(next, edges);
}

Graph subdivide_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw GraphError("subdivide_edge: not an edge");
  const Vertex w = g.vertex_count();
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  edges.emplace_back(u, w);
  edges.emplace_back(w, v);
  return Graph::from_edges(w + 1, edges);
}

bool is_cut_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<Vertex> queue{u};
  seen[u] = 1;
  while (!queue.empty()) {
    Vertex a = queue.front();
    queue.pop_front();
    for (Vertex b : g.neighbors(a)) {
      if ((a == u && b == v) || (a == v && b == u)) continue;
      if (b == v) return false;
      if (!seen[b]) {
        seen[b] = 1;
        queue.push_back(b);
      }
    }
  }
  return true;
}

Graph split_vertex(const Graph& g, Vertex v, const std::vector<Vertex>& left, Vertex pivot) {
  if (v < 0 || v >= g.vertex_count()) throw GraphError("split_vertex: unknown vertex");
  const int deg = g.degree(v);
  if (deg < 3) throw GraphError("split_vertex: degree must be at least 3");
  if (!g.has_edge(v, pivot)) throw GraphError("split_vertex: pivot is not a neighbour");
  if (!is_cut_edge(g, v, pivot)) throw GraphError("split_vertex: pivot edge is not a cut edge");
  std::set<Vertex> left_set(left.begin(), left.end());
  for (Vertex w : left_set)
    if (w == pivot || !g.has_edge(v, w)) throw GraphError("split_vertex: left must be neighbours other than the pivot");
  const int left_size = static_cast<int>(left_set.size()) + 1;
  if (left_size < 2 || left_size > deg - 1) throw GraphError("split_vertex: degenerate subset sizes");

  const Vertex v2 = g.vertex_count();
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(a, b);
  edges.emplace_back(v, pivot);
  edges.emplace_back(v2, pivot);
  for (Vertex w : g.neighbors(v)) {
    if (w == pivot) continue;
    edges.emplace_back(left_set.count(w) ? v : v2, w);
  }
  return Graph::from_edges(v2 + 1, edges);
}

bool on_internal_path(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) return false;
  auto walk = [&](Vertex from, Vertex at) {
    // Follow degree-2 vertices away from `from`.
    int steps = 0;
    while (g.degree(at) == 2 && steps <= g.vertex_count()) {
      Vertex next = g.neighbors(at)[0] == from ? g.neighbors(at)[1] : g.neighbors(at)[0];
      from = at;
      at = next;
      ++steps;
    }
    return g.degree(at) >= 3;
  };
  return walk(v, u) && walk(u, v);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < g.vertex_count(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (index[a] >= 0 && index[b] >= 0) edges.emplace_back(index[a], index[b]);
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

}  // namespace specmin
