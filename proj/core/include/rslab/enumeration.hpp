#pragma once

#include <optional>
#include <vector>

#include "rslab/graph.hpp"

namespace rslab {

// Isomorphism classes of graphs on n vertices, generated level by level:
// each class with m edges is reached by adding one non-edge orbit
// representative to a class with m-1 edges, then deduplicated by canonical
// form. Representatives are canonical graphs, sorted by canonical label.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(int n);

  int order() const { return n_; }
  int max_edges() const { return n_ * (n_ - 1) / 2; }
  // Classes with exactly m edges; levels are computed on demand and kept.
  const std::vector<Graph>& level(int m);

 private:
  int n_;
  std::vector<std::vector<Graph>> levels_;
};

// One representative per class with at most edge_cap edges, ordered by edge
// count and then canonical label.
std::vector<Graph> enumerate_graphs(int n, std::optional<int> edge_cap = std::nullopt);

// Unlabelled trees on n vertices, via the same enumeration.
std::vector<Graph> enumerate_trees(int n);

}  // namespace rslab
