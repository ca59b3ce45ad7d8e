#include "specmin/io.hpp"

namespace specmin {

std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  for (char c : text)
    if (c < 63 || c > 126) throw GraphError("graph6: character out of range");
  if (text.empty()) throw GraphError("graph6: empty text");
  std::size_t pos = 0;
  long n = 0;
  auto take = [&](int count) {
    long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw GraphError("graph6: truncated size field");
      v = (v << 6) | (text[pos++] - 63);
    }
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  const long pairs = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != need) throw GraphError("graph6: wrong body length");
  std::vector<Edge> edges;
  long bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int byte = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  return Graph::from_edges(static_cast<int>(n), edges);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(j.at("n").get<int>(), edges);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("edge-list json: ") + e.what());
  }
}

}  // namespace specmin
