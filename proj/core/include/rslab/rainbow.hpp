#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "rslab/colouring.hpp"
#include "rslab/graph.hpp"
#include "rslab/matcher.hpp"
#include "rslab/pattern.hpp"

namespace rslab {

enum class Status { kEstablished, kRefuted, kUnknown };

std::string_view to_string(Status s);

struct SearchOptions {
  // Node limit on the colouring search tree.
  std::uint64_t budget = 100'000'000;
  // Pendant edges at a common vertex are interchangeable; only colourings in
  // which they appear with increasing colours are visited. Sound for the
  // existence question and keeps the lexicographically least solution.
  bool break_leaf_symmetry = true;
};

struct SearchVerdict {
  Status status = Status::kUnknown;
  // Rainbow-free proper colouring of the searched graph.
  std::optional<EdgeColouring> colouring;
  std::optional<Embedding> embedding;
  // Counterexample for condition 2, with a rainbow-free colouring of g + e.
  std::optional<Edge> non_edge;
  std::optional<EdgeColouring> non_edge_colouring;
  std::uint64_t nodes_explored = 0;
  std::uint64_t budget = 0;
  // Host has fewer vertices than the pattern.
  bool degenerate = false;
};

// Exhaustive search over proper colourings up to colour renaming, pruned
// whenever the coloured edges already hold a rainbow copy of h. Established
// carries the lexicographically least rainbow-free colouring in the search's
// edge order.
SearchVerdict search_rainbow_free_colouring(const Graph& g, const PatternSpec& h,
                                            const SearchOptions& opts = {});
SearchVerdict search_rainbow_free_colouring(const Graph& g, const Graph& h,
                                            const SearchOptions& opts = {});

// Established iff every proper colouring of g holds a rainbow copy of h.
SearchVerdict forces_rainbow(const Graph& g, const PatternSpec& h, const SearchOptions& opts = {});
SearchVerdict forces_rainbow(const Graph& g, const Graph& h, const SearchOptions& opts = {});

// Visits every rainbow-h-free proper colouring of g, one per partition of
// E(g) into colour classes (no symmetry breaking). Return false from the
// visitor to stop. Result is kUnknown if the budget ran out, otherwise
// kEstablished if at least one colouring was visited and kRefuted if none.
Status enumerate_rainbow_free_colourings(const Graph& g, const Graph& h,
                                         const std::function<bool(const EdgeColouring&)>& visit,
                                         std::uint64_t budget = 100'000'000);

// Number of partitions of E(g) into matchings.
std::uint64_t count_proper_colourings(const Graph& g);

// Order in which the search assigns colours: breadth-first from the
// lowest-index vertex of maximum degree.
std::vector<int> search_edge_order(const Graph& g);

}  // namespace rslab
