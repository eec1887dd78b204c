#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rslab {

using Vertex = int;

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Normalises {a, b} so that the smaller index comes first.
constexpr Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 0..n-1.
//
// Edges are kept in lexicographic order; every per-edge array in the library
// (colourings in particular) is parallel to edges(). Instances are immutable
// once built.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Validating constructor. Pairs may be given in either orientation.
  // Throws Error with kIndexOutOfRange, kSelfLoop or kDuplicateEdge.
  static Graph build(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  // Neighbours in increasing order, with the matching edge ids.
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  std::span<const int> incident_edges(Vertex v) const { return adj_edge_[v]; }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }
  // Position of {a, b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  // All pairs u < v that are not edges, lexicographically.
  std::vector<Edge> non_edges() const;

  Graph with_edge(Vertex a, Vertex b) const;

  // new_label[v] is the image of v; must be a permutation of 0..n-1.
  Graph relabelled(std::span<const Vertex> new_label) const;

  // BFS distance, -1 when unreachable.
  int distance(Vertex a, Vertex b) const;
  bool is_connected() const;
  // Component index per vertex, numbered by smallest member.
  std::vector<int> component_ids() const;
  int component_count() const;
  bool is_forest() const;
  bool is_tree() const { return n_ > 0 && is_connected() && size() == n_ - 1; }

  // Non-increasing.
  std::vector<int> degree_sequence() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<int>> adj_edge_;
};

Graph complete_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

// Permutation of 0..n-1 stored as image array.
using Permutation = std::vector<Vertex>;

}  // namespace rslab
