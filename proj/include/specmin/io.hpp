#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "specmin/graph.hpp"

namespace specmin {

// Standard graph6 (no ">>graph6<<" header). Decoding throws GraphError on
// malformed text.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// {"n": int, "edges": [[u,v],...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace specmin
