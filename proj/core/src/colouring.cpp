#include "rslab/colouring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rslab/error.hpp"

namespace rslab {

EdgeColouring::EdgeColouring(std::vector<int> colours) : colours_(std::move(colours)) {
  for (int c : colours_) {
    if (c <= 0) throw Error(ErrorCode::kInvalidParameter, "colours must be positive");
  }
}

int EdgeColouring::colour_count() const {
  return static_cast<int>(std::set<int>(colours_.begin(), colours_.end()).size());
}

EdgeColouring EdgeColouring::normalised() const {
  std::map<int, int> relabel;
  std::vector<int> out;
  out.reserve(colours_.size());
  for (int c : colours_) {
    auto [it, fresh] = relabel.try_emplace(c, static_cast<int>(relabel.size()) + 1);
    out.push_back(it->second);
  }
  return EdgeColouring(std::move(out));
}

std::vector<std::vector<int>> EdgeColouring::classes() const {
  std::vector<std::vector<int>> out;
  const auto& rg = normalised().colours_;
  for (int e = 0; e < size(); ++e) {
    if (rg[e] > static_cast<int>(out.size())) out.resize(rg[e]);
    out[rg[e] - 1].push_back(e);
  }
  return out;
}

bool is_proper(const Graph& g, const EdgeColouring& c) {
  if (c.size() != g.size()) {
    throw Error(ErrorCode::kMissingEdgeColour,
                "colouring has " + std::to_string(c.size()) + " entries for " +
                    std::to_string(g.size()) + " edges");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    auto inc = g.incident_edges(v);
    std::vector<int> seen;
    seen.reserve(inc.size());
    for (int e : inc) seen.push_back(c[e]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

EdgeColouring transport_colouring(const Graph& g, const EdgeColouring& c,
                                  std::span<const Vertex> new_label) {
  Graph image = g.relabelled(new_label);
  std::vector<int> out(g.size());
  for (int e = 0; e < g.size(); ++e) {
    const Edge& x = g.edge(e);
    out[image.edge_index(new_label[x.u], new_label[x.v])] = c[e];
  }
  return EdgeColouring(std::move(out));
}

}  // namespace rslab
