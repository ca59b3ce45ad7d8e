#pragma once

#include <map>
#include <vector>

#include "specmin/graph.hpp"

namespace specmin {

// Pendant-leaf counts keyed by host vertex; absent hosts get zero.
using LeafAssignment = std::map<Vertex, int>;

// G ∘ (l(u_1), ..., l(u_t)). New vertices are appended after the existing
// ones, grouped by host in ascending host order.
Graph attach_leaves(const Graph& g, const LeafAssignment& counts);

// Replaces edge uv by the path u-w-v; w gets index vertex_count().
Graph subdivide_edge(const Graph& g, Vertex u, Vertex v);

// Replaces v by v' adjacent to left ∪ {pivot} and v'' adjacent to the
// remaining neighbours plus pivot. v' keeps index v, v'' is appended.
// Requires deg(v) >= 3, pivot a neighbour joined to v by a cut edge, and
// 2 <= |left ∪ {pivot}| <= deg(v) - 1.
Graph split_vertex(const Graph& g, Vertex v, const std::vector<Vertex>& left, Vertex pivot);

// True when removing edge uv disconnects the graph.
bool is_cut_edge(const Graph& g, Vertex u, Vertex v);

// True when uv lies on an internal path: walking away from the edge in
// both directions through degree-2 vertices ends at a vertex of degree >= 3.
bool on_internal_path(const Graph& g, Vertex u, Vertex v);

// Removes one vertex and relabels the rest in order.
Graph delete_vertex(const Graph& g, Vertex v);

// Keeps the listed vertices (sorted ascending) and relabels them 0..k-1.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

}  // namespace specmin
