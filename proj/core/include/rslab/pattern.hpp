#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rslab/graph.hpp"

namespace rslab {

enum class PatternKind {
  kPath,            // P_k
  kStar,            // K_{1,k}
  kBroom,           // B_{k,m}
  kSubdividedStar,  // T_k^*
  kDoubleStar,      // S_{t+1,s+1}
  kCaterpillar,     // leaf counts per spine vertex
  kExplicit,        // arbitrary graph without isolated vertices
};

// Declarative description of a target graph H.
//
// Realisations use a fixed labelling so that certificates are byte-stable:
//   Path P_k            0-1-...-(k-1)
//   Star K_{1,k}        centre 0, leaves 1..k
//   Broom B_{k,m}       path 0-1-...-(k-1), pendants k..k+m-1 on vertex 0
//   SubdividedStar T_k* centre 0 adjacent to 1..k-2, vertex k-1 hangs off 1
//   DoubleStar S_{t+1,s+1}
//                       centres 0 and 1, pendants 2..t+1 on 0 and
//                       t+2..t+s+1 on 1
//   Caterpillar         spine 0..l-1, then the leaves of each spine vertex
//                       in spine order
class PatternSpec {
 public:
  static PatternSpec path(int k);
  static PatternSpec star(int k);
  static PatternSpec broom(int k, int m);
  static PatternSpec subdivided_star(int k);
  static PatternSpec double_star(int t, int s);
  static PatternSpec caterpillar(std::vector<int> leaves_per_spine_vertex);
  static PatternSpec explicit_graph(const Graph& g);

  // Compact grammar: P5, K1,4, B4,2, T5star, S3,2, cat:l=4;leaves=1,0,0,1
  // (also "ℓ=" or "ell="), g6:<graph6>. File references ("@file") are
  // resolved by callers that have filesystem access.
  static PatternSpec parse(std::string_view text);

  PatternKind kind() const { return kind_; }
  const std::vector<int>& parameters() const { return params_; }

  Graph realize() const;
  int vertex_count() const;
  int edge_count() const { return realize().size(); }

  // Inverse of parse().
  std::string to_string() const;

  bool operator==(const PatternSpec& other) const {
    return kind_ == other.kind_ && params_ == other.params_ &&
           graph_ == other.graph_;
  }

 private:
  PatternSpec(PatternKind kind, std::vector<int> params)
      : kind_(kind), params_(std::move(params)) {}

  PatternKind kind_ = PatternKind::kPath;
  std::vector<int> params_;
  Graph graph_;  // kExplicit only
};

}  // namespace rslab
