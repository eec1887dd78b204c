#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rslab/graph.hpp"

namespace rslab {

// Isomorphism-complete label: equal labels iff isomorphic graphs. The bytes
// are the graph6 encoding of the canonically relabelled graph, so a label
// decodes back to a representative of its class.
struct CanonicalLabel {
  std::string bytes;

  auto operator<=>(const CanonicalLabel&) const = default;
};

struct CanonicalResult {
  CanonicalLabel label;
  // labelling[v] is the canonical position of vertex v.
  Permutation labelling;
  // Generates the full automorphism group.
  std::vector<Permutation> generators;
};

// Individualisation-refinement search over the partition backtrack tree,
// pruned only by automorphisms it has proven, so the result is exact.
CanonicalResult canonical_labelling(const Graph& g);

CanonicalLabel canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

std::vector<Permutation> automorphism_generators(const Graph& g);

// Every automorphism, by plain backtracking; stops after `limit` of them.
std::vector<Permutation> all_automorphisms(const Graph& g, std::size_t limit = 1 << 20);

// Partition of all unordered vertex pairs into automorphism orbits. Each
// orbit is sorted; orbits are ordered by their least pair. No orbit mixes
// edges with non-edges.
std::vector<std::vector<Edge>> pair_orbits(const Graph& g);

// Least pair of each non-edge orbit, in increasing order.
std::vector<Edge> non_edge_orbit_representatives(const Graph& g);

// Orbits of ordered pairs (a, b) with ab an edge, one representative each.
std::vector<std::pair<Vertex, Vertex>> oriented_edge_orbit_representatives(const Graph& g);

}  // namespace rslab
