#pragma once

#include <string>
#include <string_view>

#include "rslab/colouring.hpp"
#include "rslab/graph.hpp"

namespace rslab {

// graph6, bit-exact with the format used by nauty's geng/showg.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// {"n": int, "edges": [[u,v],...]} with u < v in lexicographic order.
std::string to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

struct ColouredGraph {
  Graph graph;
  EdgeColouring colouring;
};

// {"n":..., "edges":[[u,v],...], "colours":[c,...]}; colours parallel to
// edges. On input the edge list may be in any order.
std::string to_json(const ColouredGraph& cg);
ColouredGraph coloured_graph_from_json(std::string_view text);

// Accepts either graph6 or the JSON schema (detected by a leading '{').
Graph parse_graph(std::string_view text);

std::string to_dot(const Graph& g, const EdgeColouring* colouring = nullptr);

}  // namespace rslab
