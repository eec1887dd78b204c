#include "rslab/enumeration.hpp"

#include <map>

#include "rslab/canonical.hpp"
#include "rslab/error.hpp"
#include "rslab/graph_io.hpp"

namespace rslab {

GraphEnumerator::GraphEnumerator(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "enumeration needs n >= 1");
  levels_.push_back({canonical_graph(Graph(n))});
}

const std::vector<Graph>& GraphEnumerator::level(int m) {
  if (m < 0 || m > max_edges()) {
    throw Error(ErrorCode::kInvalidParameter, "edge count out of range: " + std::to_string(m));
  }
  while (static_cast<int>(levels_.size()) <= m) {
    std::map<CanonicalLabel, Graph> next;
    for (const Graph& g : levels_.back()) {
      for (const Edge& e : non_edge_orbit_representatives(g)) {
        CanonicalLabel label = canonical_form(g.with_edge(e.u, e.v));
        if (!next.count(label)) {
          Graph rep = from_graph6(label.bytes);
          next.emplace(std::move(label), std::move(rep));
        }
      }
    }
    std::vector<Graph> reps;
    reps.reserve(next.size());
    for (auto& [label, g] : next) reps.push_back(std::move(g));
    levels_.push_back(std::move(reps));
  }
  return levels_[m];
}

std::vector<Graph> enumerate_graphs(int n, std::optional<int> edge_cap) {
  GraphEnumerator en(n);
  int cap = en.max_edges();
  if (edge_cap) cap = std::min(cap, *edge_cap);
  std::vector<Graph> out;
  for (int m = 0; m <= cap; ++m) {
    const auto& lvl = en.level(m);
    out.insert(out.end(), lvl.begin(), lvl.end());
  }
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  GraphEnumerator en(n);
  std::vector<Graph> out;
  for (const Graph& g : en.level(n - 1))
    if (g.is_tree()) out.push_back(g);
  return out;
}

}  // namespace rslab
