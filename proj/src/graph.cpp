#include "specmin/graph.hpp"

#include <algorithm>
#include <deque>

namespace specmin {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  int twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += static_cast<int>(nb.size());
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= vertex_count()) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::distances_from(Vertex source) const {
  std::vector<int> dist(adj_.size(), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return false;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<Vertex> Graph::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (adj_[v].size() == 1) out.push_back(v);
  return out;
}

int Graph::diameter() const {
  if (!is_connected()) throw GraphError("diameter of a disconnected graph");
  int best = 0;
  if (is_tree()) {
    // Double sweep is exact on trees.
    auto d0 = distances_from(0);
    Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = distances_from(far);
    return *std::max_element(d1.begin(), d1.end());
  }
  for (Vertex v = 0; v < vertex_count(); ++v) {
    auto d = distances_from(v);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph star_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph w_graph(int n) {
  if (n < 6) throw GraphError("W_n needs n >= 6");
  int spine = n - 4;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, spine);
  e.emplace_back(0, spine + 1);
  e.emplace_back(spine - 1, spine + 2);
  e.emplace_back(spine - 1, spine + 3);
  return Graph::from_edges(n, e);
}

Graph d_graph(int n) {
  if (n < 4) throw GraphError("D_n needs n >= 4");
  int spine = n - 2;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, spine);
  e.emplace_back(0, spine + 1);
  return Graph::from_edges(n, e);
}

}  // namespace specmin
