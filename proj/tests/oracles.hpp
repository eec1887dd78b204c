#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library's search code; only Graph is shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rslab/graph.hpp"

namespace oracle {

using rslab::Edge;
using rslab::Graph;
using rslab::Vertex;

// Bit for pair {a, b} in column-major upper-triangle order, as in graph6.
inline std::uint64_t pair_bit(int /*n*/, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return std::uint64_t{1} << (b * (b - 1) / 2 + a);
}

inline std::uint64_t mask_of(const Graph& g) {
  std::uint64_t m = 0;
  for (const Edge& e : g.edges()) m |= pair_bit(g.order(), e.u, e.v);
  return m;
}

inline Graph graph_of_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (Vertex b = 1; b < n; ++b)
    for (Vertex a = 0; a < b; ++a)
      if (mask & pair_bit(n, a, b)) edges.push_back({a, b});
  return Graph::build(n, edges);
}

// Minimum adjacency mask over all relabellings: a complete invariant.
inline std::uint64_t brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = UINT64_MAX;
  do {
    std::uint64_t m = 0;
    for (const Edge& e : g.edges()) m |= pair_bit(n, perm[e.u], perm[e.v]);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::vector<std::vector<Vertex>> brute_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Vertex>> out;
  do {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (!g.adjacent(perm[e.u], perm[e.v])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::set<std::set<Edge>> brute_pair_orbits(const Graph& g) {
  const auto autos = brute_automorphisms(g);
  std::set<std::set<Edge>> orbits;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      std::set<Edge> orbit;
      for (const auto& p : autos) orbit.insert(rslab::make_edge(p[u], p[v]));
      orbits.insert(orbit);
    }
  }
  return orbits;
}

// Every injective map V(pattern) -> V(host) that sends edges to edges.
inline std::vector<std::vector<Vertex>> brute_embeddings(const Graph& host, const Graph& pattern) {
  std::vector<std::vector<Vertex>> out;
  const int k = pattern.order();
  std::vector<Vertex> map(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      for (const Edge& e : pattern.edges())
        if (!host.adjacent(map[e.u], map[e.v])) return;
      out.push_back(map);
      return;
    }
    for (Vertex w = 0; w < host.order(); ++w) {
      if (std::find(map.begin(), map.begin() + i, w) != map.begin() + i) continue;
      map[i] = w;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline bool brute_has_rainbow(const Graph& host, const std::vector<int>& colours,
                              const Graph& pattern) {
  for (const auto& map : brute_embeddings(host, pattern)) {
    std::set<int> seen;
    bool rainbow = true;
    for (const Edge& e : pattern.edges())
      if (!seen.insert(colours[host.edge_index(map[e.u], map[e.v])]).second) rainbow = false;
    if (rainbow) return true;
  }
  return false;
}

inline bool brute_is_proper(const Graph& g, const std::vector<int>& colours) {
  for (int a = 0; a < g.size(); ++a) {
    for (int b = a + 1; b < g.size(); ++b) {
      const Edge& x = g.edge(a);
      const Edge& y = g.edge(b);
      const bool touch = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
      if (touch && colours[a] == colours[b]) return false;
    }
  }
  return true;
}

// Every partition of E(g) into matchings, as restricted-growth strings in
// edge-id order. Filters after generating; no pruning.
inline std::vector<std::vector<int>> brute_proper_colourings(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(g.size(), 0);
  std::function<void(int, int)> rec = [&](int i, int maxc) {
    if (i == g.size()) {
      if (brute_is_proper(g, c)) out.push_back(c);
      return;
    }
    for (int x = 1; x <= maxc + 1; ++x) {
      c[i] = x;
      rec(i + 1, std::max(maxc, x));
    }
  };
  rec(0, 0);
  return out;
}

inline bool brute_rainbow_free_exists(const Graph& g, const Graph& pattern) {
  for (const auto& c : brute_proper_colourings(g))
    if (!brute_has_rainbow(g, c, pattern)) return true;
  return false;
}

// Condition 2 over every non-edge, condition 1 directly.
inline bool brute_properly_rainbow_saturated(const Graph& g, const Graph& pattern) {
  if (!brute_rainbow_free_exists(g, pattern)) return false;
  for (const Edge& e : g.non_edges())
    if (brute_rainbow_free_exists(g.with_edge(e.u, e.v), pattern)) return false;
  return true;
}

// Unlabelled graphs on n vertices per edge count, by Burnside's lemma over
// the induced action of S_n on vertex pairs.
inline std::vector<std::uint64_t> burnside_counts(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<long double> total(pairs + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t group = 0;
  do {
    ++group;
    std::vector<int> index(n * n, -1);
    int k = 0;
    for (int b = 1; b < n; ++b)
      for (int a = 0; a < b; ++a) index[a * n + b] = k++;
    std::vector<char> seen(pairs, 0);
    std::vector<long double> poly{1};
    for (int b = 1; b < n; ++b) {
      for (int a = 0; a < b; ++a) {
        if (seen[index[a * n + b]]) continue;
        int len = 0;
        int x = a, y = b;
        do {
          seen[index[std::min(x, y) * n + std::max(x, y)]] = 1;
          ++len;
          const int nx = perm[x], ny = perm[y];
          x = nx;
          y = ny;
        } while (!(std::min(x, y) == a && std::max(x, y) == b));
        std::vector<long double> next(poly.size() + len, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i] += poly[i];
          next[i + len] += poly[i];
        }
        poly = std::move(next);
      }
    }
    for (std::size_t i = 0; i < poly.size() && i <= static_cast<std::size_t>(pairs); ++i)
      total[i] += poly[i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::uint64_t> out;
  for (auto t : total) out.push_back(static_cast<std::uint64_t>(t / group + 0.5L));
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b});
  return Graph::build(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, int n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
