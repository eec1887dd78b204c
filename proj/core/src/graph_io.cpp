#include "rslab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rslab/error.hpp"

namespace rslab {

namespace {

using json = nlohmann::json;

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char ch) {
  int v = static_cast<unsigned char>(ch) - 63;
  if (v < 0 || v > 63) {
    throw Error(ErrorCode::kParseError,
                std::string("invalid graph6 character '") + ch + "'");
  }
  return v;
}

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::kParseError, "edge entries must be [u, v] pairs");
    }
    edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return edges;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

json edges_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty graph6 string");
  std::size_t pos = 0;
  std::int64_t n = 0;
  auto take = [&](int count) {
    std::int64_t v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw Error(ErrorCode::kParseError, "truncated graph6 size");
      v = (v << 6) | sextet(text[pos++]);
    }
    return v;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) throw Error(ErrorCode::kParseError, "graph6 graph too large");
  const std::int64_t pairs = n * (n - 1) / 2;
  const std::size_t needed = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() - pos != needed) {
    throw Error(ErrorCode::kParseError,
                "graph6 body has " + std::to_string(text.size() - pos) +
                    " characters, expected " + std::to_string(needed));
  }
  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int v = sextet(text[pos + k / 6]);
      if ((v >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  // padding bits must be zero
  if (pairs % 6 != 0) {
    int last = sextet(text.back());
    int pad = static_cast<int>(6 - pairs % 6);
    if (last & ((1 << pad) - 1)) throw Error(ErrorCode::kParseError, "nonzero graph6 padding");
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = edges_to_json(g);
  return j.dump();
}

Graph graph_from_json(std::string_view text) {
  json j = parse_json(text);
  try {
    int n = j.at("n").get<int>();
    return Graph::build(n, edges_from_json(j));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string to_json(const ColouredGraph& cg) {
  json j;
  j["n"] = cg.graph.order();
  j["edges"] = edges_to_json(cg.graph);
  j["colours"] = cg.colouring.colours();
  return j.dump();
}

ColouredGraph coloured_graph_from_json(std::string_view text) {
  json j = parse_json(text);
  try {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges = edges_from_json(j);
    std::vector<int> colours = j.at("colours").get<std::vector<int>>();
    if (colours.size() != edges.size()) {
      throw Error(ErrorCode::kMissingEdgeColour, "colours must be parallel to edges");
    }
    Graph g = Graph::build(n, edges);
    std::vector<int> ordered(g.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      ordered[g.edge_index(edges[i].u, edges[i].v)] = colours[i];
    }
    return {std::move(g), EdgeColouring(std::move(ordered))};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Graph parse_graph(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return graph_from_json(t);
  // first non-empty line
  auto nl = t.find('\n');
  return from_graph6(trim(t.substr(0, nl)));
}

std::string to_dot(const Graph& g, const EdgeColouring* colouring) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (int e = 0; e < g.size(); ++e) {
    os << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (colouring != nullptr) os << " [label=\"" << (*colouring)[e] << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rslab
