#include "rslab/saturation.hpp"

#include "json.hpp"
#include "rslab/canonical.hpp"
#include "rslab/graph_io.hpp"

namespace rslab {

namespace {

using json = nlohmann::json;

std::vector<Edge> candidate_non_edges(const Graph& g, bool use_orbits) {
  return use_orbits ? non_edge_orbit_representatives(g) : g.non_edges();
}

SaturationResult semi_saturation(const Graph& g, const Graph& h) {
  SaturationResult r;
  for (const Edge& e : non_edge_orbit_representatives(g)) {
    if (!contains_copy(g.with_edge(e.u, e.v), h)) {
      r.non_edge = e;
      return r;
    }
  }
  r.holds = true;
  return r;
}

json colouring_json(const Graph& g, const EdgeColouring& c) {
  return json::parse(to_json(ColouredGraph{g, c}));
}

}  // namespace

SaturationResult is_saturated(const Graph& g, const PatternSpec& h) {
  const Graph pattern = h.realize();
  if (auto copy = contains_copy(g, pattern)) {
    SaturationResult r;
    r.copy = std::move(copy);
    return r;
  }
  return semi_saturation(g, pattern);
}

SaturationResult is_semi_saturated(const Graph& g, const PatternSpec& h) {
  return semi_saturation(g, h.realize());
}

SearchVerdict is_properly_rainbow_saturated(const Graph& g, const PatternSpec& h,
                                            const SaturationOptions& opts) {
  const Graph pattern = h.realize();
  const std::vector<Edge> candidates = candidate_non_edges(g, opts.use_orbits);
  SearchVerdict out;
  out.budget = opts.search.budget;
  out.degenerate = g.order() < pattern.order();

  auto refute_with = [&](const Edge& e, const SearchVerdict& sub) {
    out.status = Status::kRefuted;
    out.non_edge = e;
    out.non_edge_colouring = sub.colouring;
    out.nodes_explored += sub.nodes_explored;
  };

  // Cheap necessary condition first: g + e must contain h at all.
  for (const Edge& e : candidates) {
    const Graph ge = g.with_edge(e.u, e.v);
    if (!contains_copy(ge, pattern)) {
      refute_with(e, search_rainbow_free_colouring(ge, pattern, opts.search));
      return out;
    }
  }

  SearchVerdict first = search_rainbow_free_colouring(g, pattern, opts.search);
  out.nodes_explored += first.nodes_explored;
  bool unknown = false;
  if (first.status == Status::kRefuted) {
    out.status = Status::kRefuted;
    return out;
  }
  if (first.status == Status::kUnknown) unknown = true;
  out.colouring = first.colouring;

  for (const Edge& e : candidates) {
    SearchVerdict sub = search_rainbow_free_colouring(g.with_edge(e.u, e.v), pattern, opts.search);
    if (sub.status == Status::kEstablished) {
      refute_with(e, sub);
      return out;
    }
    out.nodes_explored += sub.nodes_explored;
    if (sub.status == Status::kUnknown) unknown = true;
  }
  out.status = unknown ? Status::kUnknown : Status::kEstablished;
  return out;
}

std::string verdict_to_json(const Graph& g, const SearchVerdict& v) {
  json j;
  j["status"] = std::string(to_string(v.status));
  j["nodes_explored"] = v.nodes_explored;
  j["budget"] = v.budget;
  j["degenerate"] = v.degenerate;
  json cert = json::object();
  if (v.colouring) cert["colouring"] = colouring_json(g, *v.colouring);
  if (v.embedding) cert["embedding"] = v.embedding->map;
  if (v.non_edge) cert["non_edge"] = {v.non_edge->u, v.non_edge->v};
  if (v.non_edge_colouring && v.non_edge) {
    cert["non_edge_colouring"] =
        colouring_json(g.with_edge(v.non_edge->u, v.non_edge->v), *v.non_edge_colouring);
  }
  j["certificate"] = cert;
  if (v.degenerate) j["note"] = "degenerate regime: host has fewer vertices than the pattern";
  return j.dump();
}

std::string saturation_to_json(const SaturationResult& r) {
  json j;
  j["holds"] = r.holds;
  if (r.copy) j["copy"] = r.copy->map;
  if (r.non_edge) j["non_edge"] = {r.non_edge->u, r.non_edge->v};
  return j.dump();
}

}  // namespace rslab
