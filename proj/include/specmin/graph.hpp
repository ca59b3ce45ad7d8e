#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specmin {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built; every transformation returns a new graph.
class Graph {
public:
  Graph() = default;

  // Throws GraphError on out-of-range endpoints or self-loops. Duplicate
  // pairs (in either orientation) collapse to one edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  bool is_tree() const { return vertex_count() > 0 && edge_count_ == vertex_count() - 1 && is_connected(); }

  // Vertices of degree one, ascending.
  std::vector<Vertex> leaves() const;

  // BFS distances from `source`; -1 for unreachable vertices.
  std::vector<int> distances_from(Vertex source) const;
  // Throws GraphError when disconnected.
  int diameter() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

// Small constructors used throughout tests and tools.
Graph path_graph(int n);
Graph star_graph(int n);   // K_{1,n-1}, center 0
Graph complete_graph(int n);
// P_{n-4} with two pendant vertices at each end (n >= 6).
Graph w_graph(int n);
// P_{n-2} with two pendant vertices at one end (n >= 4).
Graph d_graph(int n);

}  // namespace specmin
