#include "rslab/constructions.hpp"

#include <algorithm>
#include <functional>

#include "rslab/error.hpp"
#include "rslab/graph_io.hpp"
#include "rslab/saturation.hpp"

namespace rslab {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidParameter, message);
}

EdgeColouring colour_edges(const Graph& g, const std::function<int(const Edge&)>& colour_of) {
  std::vector<int> colours;
  colours.reserve(g.size());
  for (const Edge& e : g.edges()) colours.push_back(colour_of(e));
  return EdgeColouring(std::move(colours));
}

Graph shifted_union(const std::vector<Graph>& parts) {
  Graph out(0);
  for (const Graph& p : parts) out = disjoint_union(out, p);
  return out;
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::build(leaves + 1, edges);
}

// K_1 + m K_s: centre 0, clique j on 1 + j*s .. (j+1)*s.
Graph centred_cliques(int m, int s) {
  std::vector<Edge> edges;
  for (int j = 0; j < m; ++j) {
    const Vertex base = 1 + j * s;
    for (Vertex a = base; a < base + s; ++a) {
      edges.push_back({0, a});
      for (Vertex b = a + 1; b < base + s; ++b) edges.push_back({a, b});
    }
  }
  return Graph::build(m * s + 1, edges);
}

}  // namespace

GadgetBundle folded_cube(int ell) {
  if (ell < 4 || ell > 22) invalid("folded cube needs 4 <= ell <= 22");
  const int d = ell - 2;
  const int size = 1 << d;
  const int all_ones = size - 1;
  std::vector<Edge> edges;
  for (int x = 0; x < size; ++x) {
    for (int i = 0; i < d; ++i) {
      const int y = x ^ (1 << i);
      if (x < y) edges.push_back({x, y});
    }
    if (x < (x ^ all_ones)) edges.push_back({x, x ^ all_ones});
  }
  GadgetBundle b;
  b.graph = Graph::build(size, edges);
  b.colouring = colour_edges(b.graph, [&](const Edge& e) {
    const int diff = e.u ^ e.v;
    if (diff == all_ones) return ell - 1;
    int i = 0;
    while ((1 << i) != diff) ++i;
    return i + 1;
  });
  b.provenance = "folded cube F_" + std::to_string(ell - 1) +
                 " with its difference colouring; no rainbow P_" + std::to_string(ell);
  return b;
}

GadgetBundle broom_gadget(int m) {
  if (m < 1 || m > 1000) invalid("broom gadget needs 1 <= m <= 1000");
  auto y = [m](int i, int j) { return 3 + (i - 1) * (m + 1) + j; };
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 0; j <= m; ++j) edges.push_back({i - 1, y(i, j)});
  GadgetBundle b;
  b.graph = Graph::build(3 * (m + 2), edges);
  b.colouring = colour_edges(b.graph, [&](const Edge& e) {
    if (e.v < 3) return 6 - (e.u + 1) - (e.v + 1);  // opposite x_i
    const int i = e.u + 1;
    const int j = e.v - y(i, 0);
    return j == 0 ? i : j + 3;
  });
  b.provenance = "triangle gadget with " + std::to_string(m + 1) +
                 " pendants per corner and its rainbow B_{4," + std::to_string(m) +
                 "}-free colouring";
  return b;
}

Graph broom_saturated(int n, int m, const CensusOptions& remainder_census) {
  if (m < 1) invalid("broom_saturated needs m >= 1");
  const int block = 3 * (m + 2);
  if (n < block) invalid("broom_saturated needs n >= 3(m+2)");
  const int copies = n / block;
  const int r = n % block;
  std::vector<Graph> parts(copies, broom_gadget(m).graph);
  if (r > 0 && r < 3) {
    parts.push_back(complete_graph(r));
  } else if (r >= 3) {
    CensusRecord rec;
    try {
      rec = prsat_number(r, PatternSpec::broom(4, m), remainder_census);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      throw Error(ErrorCode::kOracleBudgetExceeded,
                  "remainder component on " + std::to_string(r) + " vertices: " + e.what());
    }
    if (rec.status == CensusStatus::kUnknown) {
      throw Error(ErrorCode::kOracleBudgetExceeded,
                  "prsat census for the remainder on " + std::to_string(r) +
                      " vertices is undecided");
    }
    if (rec.status == CensusStatus::kNone) {
      throw Error(ErrorCode::kConstructionInvalid,
                  "no properly rainbow saturated graph on " + std::to_string(r) + " vertices");
    }
    parts.push_back(from_graph6(rec.witnesses.front().bytes));
  }
  return shifted_union(parts);
}

GadgetBundle caterpillar_construction(int n, int k, int ell) {
  if (ell < 4 || ell > 22) invalid("caterpillar construction needs 4 <= ell <= 22");
  if (k < ell + 2) invalid("caterpillar construction needs k >= ell + 2");
  const int cube = 1 << (ell - 2);
  if (n < (k + 1) * cube) invalid("caterpillar construction needs n >= (k+1) 2^(ell-2)");
  GadgetBundle base = folded_cube(ell);
  std::vector<Edge> edges = base.graph.edges();
  for (int p = 0; p < n - cube; ++p) edges.push_back({p % cube, cube + p});
  GadgetBundle b;
  b.graph = Graph::build(n, edges);
  b.colouring = colour_edges(b.graph, [&](const Edge& e) {
    if (e.v < cube) return base.colouring[base.graph.edge_index(e.u, e.v)];
    return ell + (e.v - cube) / cube;
  });
  b.provenance = "folded cube F_" + std::to_string(ell - 1) + " with " +
                 std::to_string(n - cube) + " pendants, for caterpillars with a spine of " +
                 std::to_string(ell) + " vertices";
  return b;
}

Graph star_forest(int n, int k) {
  if (k < 4) invalid("star_forest needs k >= 4");
  if (n < k + 3) invalid("star_forest needs n >= k + 3");
  const int c = (n + k - 1) / (k + 1);
  const PatternSpec target = PatternSpec::subdivided_star(k + 1);

  // Component orders, non-increasing, each >= 2.
  std::vector<std::vector<int>> candidates;
  std::vector<int> parts;
  std::function<void(int, int, int)> split = [&](int left, int slots, int cap) {
    if (slots == 0) {
      if (left == 0) candidates.push_back(parts);
      return;
    }
    for (int p = std::min(cap, left - 2 * (slots - 1)); p >= 2; --p) {
      parts.push_back(p);
      split(left - p, slots - 1, p);
      parts.pop_back();
    }
  };
  split(n, c, n);
  auto full = [k](const std::vector<int>& ps) {
    return std::count(ps.begin(), ps.end(), k + 1);
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& a, const auto& b) { return full(a) > full(b); });

  for (const auto& ps : candidates) {
    const int k2 = static_cast<int>(std::count(ps.begin(), ps.end(), 2));
    bool shaped = k2 <= 1;
    for (int p : ps)
      if (p > 2 && p - 1 < k) shaped = false;
    if (!shaped) continue;
    std::vector<Graph> comps;
    for (int p : ps) comps.push_back(star(p - 1));
    Graph g = shifted_union(comps);
    if (is_saturated(g, target).holds) return g;
  }
  throw Error(ErrorCode::kConstructionInvalid,
              "no star forest on " + std::to_string(n) + " vertices with " + std::to_string(c) +
                  " components is T_" + std::to_string(k + 1) + "^*-saturated");
}

int double_star_m(int t, int s) {
  if (s < 1 || t < s) invalid("double star needs t >= s >= 1");
  return (t + 1 + s - 1) / s + 1;
}

Graph double_star_construction(int n, int t, int s, DoubleStarVariant variant) {
  if (s < 1 || t < s) invalid("double star construction needs t >= s >= 1");
  if (n < 1) invalid("double star construction needs n >= 1");
  const int m = variant == DoubleStarVariant::kSat ? double_star_m(t, s) : double_star_m(t + s, s);
  const int small = m * s + 1;
  const int large = (m + 1) * s + 1;
  for (int b = 0; b * large <= n; ++b) {
    const int rest = n - b * large;
    if (rest % small != 0) continue;
    std::vector<Graph> comps(rest / small, centred_cliques(m, s));
    for (int i = 0; i < b; ++i) comps.push_back(centred_cliques(m + 1, s));
    return shifted_union(comps);
  }
  throw Error(ErrorCode::kNotRepresentable,
              std::to_string(n) + " is not a(" + std::to_string(small) + ") + b(" +
                  std::to_string(large) + ") for non-negative a, b; n is too small");
}

}  // namespace rslab
