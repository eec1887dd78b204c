#include "rslab/matcher.hpp"

#include <algorithm>
#include <set>

#include "rslab/canonical.hpp"

namespace rslab {

Matcher::Matcher(const Graph& host, const Graph& pattern)
    : n_(host.order()),
      k_(pattern.order()),
      host_(host),
      edge_id_(static_cast<std::size_t>(n_) * n_, -1),
      pattern_degree_(k_),
      pattern_adj_(k_),
      map_(k_, -1),
      host_used_(n_, 0),
      colour_used_(host.size() + 2, 0) {
  for (int id = 0; id < host.size(); ++id) {
    const Edge& e = host.edge(id);
    edge_id_[e.u * n_ + e.v] = id;
    edge_id_[e.v * n_ + e.u] = id;
  }
  for (Vertex x = 0; x < k_; ++x) {
    pattern_degree_[x] = pattern.degree(x);
    pattern_adj_[x].assign(pattern.neighbours(x).begin(), pattern.neighbours(x).end());
  }
  std::vector<Vertex> identity(k_);
  for (Vertex x = 0; x < k_; ++x) identity[x] = x;
  natural_ = make_plan(identity);
  for (auto [a, b] : oriented_edge_orbit_representatives(pattern)) {
    anchors_.push_back({make_plan({a, b}), {a, b}});
  }
}

Matcher::Plan Matcher::make_plan(std::vector<Vertex> seed) const {
  Plan plan;
  plan.order = std::move(seed);
  std::vector<char> placed(k_, 0);
  for (Vertex x : plan.order) placed[x] = 1;
  // Breadth-first completion so that every vertex after the first of its
  // component has an earlier neighbour.
  for (std::size_t head = 0; plan.order.size() < static_cast<std::size_t>(k_);) {
    if (head == plan.order.size()) {
      Vertex x = static_cast<Vertex>(std::find(placed.begin(), placed.end(), 0) - placed.begin());
      placed[x] = 1;
      plan.order.push_back(x);
    }
    for (Vertex y : pattern_adj_[plan.order[head]]) {
      if (!placed[y]) {
        placed[y] = 1;
        plan.order.push_back(y);
      }
    }
    ++head;
  }
  std::vector<int> position(k_);
  for (int i = 0; i < k_; ++i) position[plan.order[i]] = i;
  plan.back.resize(k_);
  for (int i = 0; i < k_; ++i) {
    for (Vertex y : pattern_adj_[plan.order[i]])
      if (position[y] < i) plan.back[i].push_back(position[y]);
    std::sort(plan.back[i].begin(), plan.back[i].end());
  }
  return plan;
}

bool Matcher::try_colours(const Plan& plan, std::size_t pos, Vertex w, const int* colours,
                          bool rainbow, std::vector<int>& taken) const {
  for (int j : plan.back[pos]) {
    const int id = edge_id_[map_[plan.order[j]] * n_ + w];
    if (id < 0) return false;
    if (colours == nullptr) continue;
    const int c = colours[id];
    if (c == 0) return false;
    if (rainbow) {
      if (colour_used_[c]) return false;
      colour_used_[c] = 1;
      taken.push_back(c);
    }
  }
  return true;
}

bool Matcher::extend(const Plan& plan, std::size_t pos, const int* colours, bool rainbow) const {
  if (pos == plan.order.size()) return true;
  const Vertex x = plan.order[pos];
  std::vector<int> taken;
  auto attempt = [&](Vertex w) {
    if (host_used_[w] || host_.degree(w) < pattern_degree_[x]) return false;
    taken.clear();
    bool ok = try_colours(plan, pos, w, colours, rainbow, taken);
    if (ok) {
      map_[x] = w;
      host_used_[w] = 1;
      ok = extend(plan, pos + 1, colours, rainbow);
      host_used_[w] = 0;
    }
    for (int c : taken) colour_used_[c] = 0;
    return ok;
  };
  if (plan.back[pos].empty()) {
    for (Vertex w = 0; w < n_; ++w)
      if (attempt(w)) return true;
  } else {
    for (Vertex w : host_.neighbours(map_[plan.order[plan.back[pos][0]]]))
      if (attempt(w)) return true;
  }
  return false;
}

std::optional<Embedding> Matcher::find(const int* colours, bool rainbow) const {
  if (k_ > n_) return std::nullopt;
  if (!extend(natural_, 0, colours, rainbow)) return std::nullopt;
  return Embedding{map_};
}

bool Matcher::rainbow_copy_through(const int* colours, int edge_id) const {
  if (k_ > n_) return false;
  const Edge& e = host_.edge(edge_id);
  const int c = colours[edge_id];
  for (const auto& [plan, anchor] : anchors_) {
    const auto [a, b] = anchor;
    if (host_.degree(e.u) < pattern_degree_[a] || host_.degree(e.v) < pattern_degree_[b]) continue;
    map_[a] = e.u;
    map_[b] = e.v;
    host_used_[e.u] = host_used_[e.v] = 1;
    colour_used_[c] = 1;
    const bool found = extend(plan, 2, colours, true);
    host_used_[e.u] = host_used_[e.v] = 0;
    colour_used_[c] = 0;
    if (found) return true;
  }
  return false;
}

bool is_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.order()) return false;
  std::set<Vertex> image;
  for (Vertex w : e.map) {
    if (w < 0 || w >= host.order() || !image.insert(w).second) return false;
  }
  for (const Edge& pe : pattern.edges())
    if (!host.adjacent(e.map[pe.u], e.map[pe.v])) return false;
  return true;
}

bool is_rainbow_embedding(const Graph& host, const EdgeColouring& c, const Graph& pattern,
                          const Embedding& e) {
  if (!is_embedding(host, pattern, e) || c.size() != host.size()) return false;
  std::set<int> seen;
  for (const Edge& pe : pattern.edges())
    if (!seen.insert(c[host.edge_index(e.map[pe.u], e.map[pe.v])]).second) return false;
  return true;
}

std::optional<Embedding> contains_copy(const Graph& host, const Graph& pattern) {
  return Matcher(host, pattern).find(nullptr, false);
}

std::optional<Embedding> contains_copy(const Graph& host, const PatternSpec& pattern) {
  return contains_copy(host, pattern.realize());
}

std::optional<Embedding> find_rainbow_copy(const Graph& host, const EdgeColouring& c,
                                           const Graph& pattern) {
  if (c.size() != host.size()) {
    // same error as is_proper for a colouring of the wrong graph
    is_proper(host, c);
  }
  const EdgeColouring normal = c.normalised();
  return Matcher(host, pattern).find(normal.colours().data(), true);
}

std::optional<Embedding> find_rainbow_copy(const Graph& host, const EdgeColouring& c,
                                           const PatternSpec& pattern) {
  return find_rainbow_copy(host, c, pattern.realize());
}

}  // namespace rslab
