#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rslab/colouring.hpp"
#include "rslab/graph.hpp"
#include "rslab/pattern.hpp"

namespace rslab {

// Injective vertex map from a pattern into a host; map[x] is the image of
// pattern vertex x.
struct Embedding {
  std::vector<Vertex> map;

  bool operator==(const Embedding&) const = default;
};

bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& e);
bool is_rainbow_embedding(const Graph& host, const EdgeColouring& c, const Graph& pattern,
                          const Embedding& e);

// Subgraph (not induced) isomorphism search. The returned embedding is the
// lexicographically least one.
std::optional<Embedding> contains_copy(const Graph& host, const Graph& pattern);
std::optional<Embedding> contains_copy(const Graph& host, const PatternSpec& pattern);

// Like contains_copy, restricted to embeddings whose edges get pairwise
// distinct colours. Works for improper colourings too.
std::optional<Embedding> find_rainbow_copy(const Graph& host, const EdgeColouring& c,
                                           const Graph& pattern);
std::optional<Embedding> find_rainbow_copy(const Graph& host, const EdgeColouring& c,
                                           const PatternSpec& pattern);

// Reusable matcher for one (host, pattern) pair. Colour arrays are parallel
// to host.edges(); colour 0 marks an edge as not yet present.
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern);

  // colours == nullptr means plain subgraph search over all host edges.
  std::optional<Embedding> find(const int* colours, bool rainbow) const;

  // True iff some rainbow copy among coloured edges uses host edge `edge_id`.
  bool rainbow_copy_through(const int* colours, int edge_id) const;

 private:
  struct Plan {
    std::vector<Vertex> order;
    // back[i]: positions j < i whose pattern vertex is adjacent to order[i].
    std::vector<std::vector<int>> back;
  };

  Plan make_plan(std::vector<Vertex> seed) const;
  bool extend(const Plan& plan, std::size_t pos, const int* colours, bool rainbow) const;
  bool try_colours(const Plan& plan, std::size_t pos, Vertex w, const int* colours,
                   bool rainbow, std::vector<int>& taken) const;

  int n_;
  int k_;
  const Graph& host_;
  std::vector<int> edge_id_;  // n*n, -1 when absent
  std::vector<int> pattern_degree_;
  std::vector<std::vector<Vertex>> pattern_adj_;
  Plan natural_;
  std::vector<std::pair<Plan, std::pair<Vertex, Vertex>>> anchors_;

  // Scratch state; a Matcher is not safe to share between threads.
  mutable std::vector<Vertex> map_;
  mutable std::vector<char> host_used_;
  mutable std::vector<char> colour_used_;
};

}  // namespace rslab
