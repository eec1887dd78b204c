#pragma once

#include <optional>
#include <string>

#include "rslab/graph.hpp"
#include "rslab/matcher.hpp"
#include "rslab/pattern.hpp"
#include "rslab/rainbow.hpp"

namespace rslab {

struct SaturationResult {
  bool holds = false;
  // Set when g already contains h (saturation only).
  std::optional<Embedding> copy;
  // First non-edge, in orbit order, whose addition creates no copy of h.
  std::optional<Edge> non_edge;
};

// Non-edges are examined one per automorphism orbit.
SaturationResult is_saturated(const Graph& g, const PatternSpec& h);
SaturationResult is_semi_saturated(const Graph& g, const PatternSpec& h);

struct SaturationOptions {
  SearchOptions search;
  // When false every non-edge is checked, not one per orbit.
  bool use_orbits = true;
};

// Both conditions of proper rainbow saturation. The budget applies to each
// colouring search separately; nodes_explored is their sum. Refuted is
// reported with the first failing condition; Unknown only if nothing was
// refuted and some search ran out of budget.
SearchVerdict is_properly_rainbow_saturated(const Graph& g, const PatternSpec& h,
                                            const SaturationOptions& opts = {});

std::string verdict_to_json(const Graph& g, const SearchVerdict& v);
std::string saturation_to_json(const SaturationResult& r);

}  // namespace rslab
