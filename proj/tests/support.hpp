#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <vector>

#include "specmin/graph.hpp"

namespace testing {

using specmin::Edge;
using specmin::Graph;
using specmin::Vertex;

// Uniform labeled tree on n vertices from a random Prüfer sequence.
inline Graph random_tree(int n, std::mt19937& rng) {
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (int& x : prufer) x = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : prufer) ++degree[x];
  std::vector<Edge> edges;
  for (int x : prufer) {
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        edges.emplace_back(v, x);
        --degree[v];
        --degree[x];
        break;
      }
    }
  }
  int u = -1, w = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) (u < 0 ? u : w) = v;
  edges.emplace_back(u, w);
  return Graph::from_edges(n, edges);
}

// Random connected graph: a random tree plus each other pair with probability p.
inline Graph random_connected(int n, double p, std::mt19937& rng) {
  Graph t = random_tree(n, rng);
  auto edges = t.edges();
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!t.has_edge(u, v) && coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// 2-colouring of a connected bipartite graph from vertex 0.
inline std::vector<int> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Vertex> q;
  side[0] = 0;
  q.push(0);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u))
      if (side[v] < 0) {
        side[v] = 1 - side[u];
        q.push(v);
      }
  }
  return side;
}

// Perron vector by plain power iteration on A + I, normalised to max 1.
inline std::vector<double> perron_vector(const Graph& g, int iterations = 20000) {
  const int n = g.vertex_count();
  std::vector<double> x(static_cast<std::size_t>(n), 1.0), y(x.size());
  for (int it = 0; it < iterations; ++it) {
    for (int u = 0; u < n; ++u) {
      y[u] = x[u];
      for (Vertex v : g.neighbors(u)) y[u] += x[v];
    }
    double m = *std::max_element(y.begin(), y.end());
    for (int u = 0; u < n; ++u) x[u] = y[u] / m;
  }
  return x;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace testing
