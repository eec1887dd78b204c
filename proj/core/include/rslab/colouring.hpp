#pragma once

#include <vector>

#include "rslab/graph.hpp"

namespace rslab {

// Edge colouring parallel to Graph::edges(); colours are positive integers.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(std::vector<int> colours);

  const std::vector<int>& colours() const { return colours_; }
  int operator[](int edge_id) const { return colours_[edge_id]; }
  int size() const { return static_cast<int>(colours_.size()); }

  int colour_count() const;

  // Relabels colours 1, 2, ... in order of first appearance.
  EdgeColouring normalised() const;

  // Edge ids per colour class, classes ordered by first edge.
  std::vector<std::vector<int>> classes() const;

  // Same partition of edges into colour classes.
  bool equivalent_to(const EdgeColouring& other) const {
    return normalised() == other.normalised();
  }

  bool operator==(const EdgeColouring&) const = default;

 private:
  std::vector<int> colours_;
};

// True iff every colour class is a matching. Throws kMissingEdgeColour when
// the colouring does not cover exactly the edges of g.
bool is_proper(const Graph& g, const EdgeColouring& c);

// The colouring of g (a graph on the same vertex set) induced by sending each
// edge through new_label: result[e'] = c[e] where e' = new_label(e).
EdgeColouring transport_colouring(const Graph& g, const EdgeColouring& c,
                                  std::span<const Vertex> new_label);

}  // namespace rslab
