#include "rslab/canonical.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>

#include "rslab/graph_io.hpp"

namespace rslab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // root is the least element
  }

 private:
  std::vector<std::size_t> parent_;
};

using Cells = std::vector<std::vector<Vertex>>;
using Image = std::vector<std::uint64_t>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), words_((n_ + 63) / 64), adj_(n_ * words_, 0) {
    for (const Edge& e : g.edges()) {
      set_bit(e.u, e.v);
      set_bit(e.v, e.u);
    }
  }

  CanonicalResult run() {
    CanonicalResult out;
    if (n_ == 0) {
      out.label.bytes = to_graph6(g_);
      return out;
    }
    seed_twin_transpositions();
    Cells root{std::vector<Vertex>(n_)};
    std::iota(root[0].begin(), root[0].end(), 0);
    refine(root);
    std::vector<Vertex> prefix;
    explore(root, prefix);
    out.labelling = best_labelling_;
    out.label.bytes = to_graph6(g_.relabelled(best_labelling_));
    out.generators = std::move(generators_);
    return out;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  void set_bit(Vertex a, Vertex b) {
    adj_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }
  bool test(Vertex a, Vertex b) const {
    return (adj_[a * words_ + b / 64] >> (b % 64)) & 1;
  }

  // Vertices with identical open or closed neighbourhoods can be swapped.
  void seed_twin_transpositions() {
    std::map<std::vector<Vertex>, std::vector<Vertex>> open, closed;
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<Vertex> nb(g_.neighbours(v).begin(), g_.neighbours(v).end());
      open[nb].push_back(v);
      nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
      closed[nb].push_back(v);
    }
    for (const auto* classes : {&open, &closed}) {
      for (const auto& [key, members] : *classes) {
        for (std::size_t i = 1; i < members.size(); ++i) {
          Permutation p(n_);
          std::iota(p.begin(), p.end(), 0);
          std::swap(p[members[0]], p[members[i]]);
          generators_.push_back(std::move(p));
        }
      }
    }
  }

  // Equitable refinement. Every step depends only on the ordered partition
  // and adjacency, never on vertex names, so it commutes with relabelling.
  void refine(Cells& cells) const {
    std::vector<int> count(n_);
    std::vector<char> in_splitter(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        std::fill(in_splitter.begin(), in_splitter.end(), 0);
        for (Vertex v : cells[s]) in_splitter[v] = 1;
        for (std::size_t x = 0; x < cells.size(); ++x) {
          auto& cell = cells[x];
          if (cell.size() == 1) continue;
          bool uniform = true;
          for (Vertex v : cell) {
            int c = 0;
            for (Vertex w : g_.neighbours(v)) c += in_splitter[w];
            count[v] = c;
            if (count[v] != count[cell[0]]) uniform = false;
          }
          if (uniform) continue;
          std::vector<Vertex> sorted = cell;
          std::sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
            return count[a] != count[b] ? count[a] < count[b] : a < b;
          });
          Cells parts;
          for (Vertex v : sorted) {
            if (parts.empty() || count[parts.back()[0]] != count[v]) parts.emplace_back();
            parts.back().push_back(v);
          }
          const std::size_t extra = parts.size() - 1;
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                       std::make_move_iterator(parts.begin()),
                       std::make_move_iterator(parts.end()));
          if (x < s) s += extra;
          x += extra;
          changed = true;
        }
      }
    }
  }

  Image image_of(const std::vector<Vertex>& at_position) const {
    const std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    Image img((pairs + 63) / 64, 0);
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if (test(at_position[i], at_position[j])) {
          img[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
      }
    }
    return img;
  }

  bool fixes_prefix(const Permutation& p, const std::vector<Vertex>& prefix) const {
    for (Vertex v : prefix)
      if (p[v] != v) return false;
    return true;
  }

  bool pruned(Vertex w, const std::vector<Vertex>& explored,
              const std::vector<Vertex>& prefix) const {
    if (explored.empty()) return false;
    UnionFind uf(n_);
    for (const auto& p : generators_) {
      if (!fixes_prefix(p, prefix)) continue;
      for (Vertex v = 0; v < n_; ++v) uf.unite(v, p[v]);
    }
    for (Vertex x : explored)
      if (uf.find(x) == uf.find(w)) return true;
    return false;
  }

  // Returns the prefix length of the node at which the search should resume,
  // or kNoJump.
  int explore(const Cells& cells, std::vector<Vertex>& prefix) {
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, prefix);
    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<Vertex> children = cells[target];
    std::sort(children.begin(), children.end());
    std::vector<Vertex> explored;
    for (Vertex w : children) {
      if (pruned(w, explored, prefix)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({w});
        std::vector<Vertex> rest;
        for (Vertex v : cells[i])
          if (v != w) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(w);
      int r = explore(child, prefix);
      prefix.pop_back();
      explored.push_back(w);
      if (r < static_cast<int>(prefix.size())) return r;
    }
    return kNoJump;
  }

  int leaf(const Cells& cells, const std::vector<Vertex>& prefix) {
    std::vector<Vertex> at_position(n_);
    Permutation labelling(n_);
    for (int i = 0; i < n_; ++i) {
      at_position[i] = cells[i][0];
      labelling[cells[i][0]] = i;
    }
    Image img = image_of(at_position);
    if (first_image_.empty() && !have_first_) {
      have_first_ = true;
      first_image_ = img;
      first_at_position_ = at_position;
      first_prefix_ = prefix;
      best_image_ = std::move(img);
      best_labelling_ = std::move(labelling);
      return kNoJump;
    }
    if (img == first_image_) {
      Permutation gamma(n_);
      for (Vertex v = 0; v < n_; ++v) gamma[v] = first_at_position_[labelling[v]];
      generators_.push_back(std::move(gamma));
      std::size_t common = 0;
      while (common < prefix.size() && common < first_prefix_.size() &&
             prefix[common] == first_prefix_[common]) {
        ++common;
      }
      return static_cast<int>(common);
    }
    if (img > best_image_) {
      best_image_ = std::move(img);
      best_labelling_ = std::move(labelling);
    } else if (img == best_image_) {
      Permutation gamma(n_);
      std::vector<Vertex> best_at_position(n_);
      for (Vertex v = 0; v < n_; ++v) best_at_position[best_labelling_[v]] = v;
      for (Vertex v = 0; v < n_; ++v) gamma[v] = best_at_position[labelling[v]];
      generators_.push_back(std::move(gamma));
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
  std::vector<Permutation> generators_;

  bool have_first_ = false;
  Image first_image_;
  std::vector<Vertex> first_at_position_;
  std::vector<Vertex> first_prefix_;
  Image best_image_;
  Permutation best_labelling_;
};

bool extend_automorphism(const Graph& g, Permutation& map, std::vector<char>& used,
                         Vertex v, std::vector<Permutation>& out, std::size_t limit) {
  const int n = g.order();
  if (v == n) {
    out.push_back(map);
    return out.size() < limit;
  }
  for (Vertex w = 0; w < n; ++w) {
    if (used[w] || g.degree(w) != g.degree(v)) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) {
      if (g.adjacent(u, v) != g.adjacent(map[u], w)) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    bool more = extend_automorphism(g, map, used, v + 1, out, limit);
    used[w] = 0;
    if (!more) return false;
  }
  return true;
}

}  // namespace

CanonicalResult canonical_labelling(const Graph& g) { return CanonicalSearch(g).run(); }

CanonicalLabel canonical_form(const Graph& g) { return canonical_labelling(g).label; }

Graph canonical_graph(const Graph& g) {
  return from_graph6(canonical_labelling(g).label.bytes);
}

std::vector<Permutation> automorphism_generators(const Graph& g) {
  return canonical_labelling(g).generators;
}

std::vector<Permutation> all_automorphisms(const Graph& g, std::size_t limit) {
  std::vector<Permutation> out;
  Permutation map(g.order(), -1);
  std::vector<char> used(g.order(), 0);
  extend_automorphism(g, map, used, 0, out, limit);
  return out;
}

std::vector<std::vector<Edge>> pair_orbits(const Graph& g) {
  const int n = g.order();
  auto index = [n](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * n + b;
  };
  UnionFind uf(static_cast<std::size_t>(n) * n);
  for (const auto& p : automorphism_generators(g)) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) uf.unite(index(u, v), index(p[u], p[v]));
  }
  std::map<std::size_t, std::vector<Edge>> by_root;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) by_root[uf.find(index(u, v))].push_back({u, v});
  std::vector<std::vector<Edge>> orbits;
  for (auto& [root, members] : by_root) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

std::vector<Edge> non_edge_orbit_representatives(const Graph& g) {
  std::vector<Edge> reps;
  for (const auto& orbit : pair_orbits(g)) {
    if (!g.adjacent(orbit.front().u, orbit.front().v)) reps.push_back(orbit.front());
  }
  return reps;
}

std::vector<std::pair<Vertex, Vertex>> oriented_edge_orbit_representatives(const Graph& g) {
  const int n = g.order();
  UnionFind uf(static_cast<std::size_t>(n) * n);
  for (const auto& p : automorphism_generators(g)) {
    for (const Edge& e : g.edges()) {
      uf.unite(static_cast<std::size_t>(e.u) * n + e.v,
               static_cast<std::size_t>(p[e.u]) * n + p[e.v]);
      uf.unite(static_cast<std::size_t>(e.v) * n + e.u,
               static_cast<std::size_t>(p[e.v]) * n + p[e.u]);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> reps;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::pair<Vertex, Vertex>> oriented;
  for (const Edge& e : g.edges()) {
    oriented.push_back({e.u, e.v});
    oriented.push_back({e.v, e.u});
  }
  std::sort(oriented.begin(), oriented.end());
  for (auto [a, b] : oriented) {
    std::size_t root = uf.find(static_cast<std::size_t>(a) * n + b);
    if (!seen[root]) {
      seen[root] = 1;
      reps.push_back({a, b});
    }
  }
  return reps;
}

}  // namespace rslab
