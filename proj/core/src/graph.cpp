#include "rslab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "rslab/error.hpp"

namespace rslab {

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidParameter, "negative vertex count");
  n_ = n;
  adj_.resize(n);
  adj_edge_.resize(n);
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + ") given twice");
  }
  for (int id = 0; id < g.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) std::sort(g.adj_[v].begin(), g.adj_[v].end());
  for (Vertex v = 0; v < n; ++v) {
    g.adj_edge_[v].reserve(g.adj_[v].size());
    for (Vertex w : g.adj_[v]) {
      auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), make_edge(v, w));
      g.adj_edge_[v].push_back(static_cast<int>(it - g.edges_.begin()));
    }
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
  return best;
}

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return -1;
  const auto& nb = adj_[a];
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return -1;
  return adj_edge_[a][it - nb.begin()];
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> e = edges_;
  e.push_back(make_edge(a, b));
  return build(n_, e);
}

Graph Graph::relabelled(std::span<const Vertex> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw Error(ErrorCode::kInvalidParameter, "relabelling has wrong length");
  }
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const Edge& x : edges_) e.push_back(make_edge(new_label[x.u], new_label[x.v]));
  return build(n_, e);
}

int Graph::distance(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw Error(ErrorCode::kIndexOutOfRange, "distance query out of range");
  }
  std::vector<int> dist(n_, -1);
  std::queue<Vertex> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == b) return dist[x];
    for (Vertex y : adj_[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return -1;
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj_[x]) {
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

int Graph::component_count() const {
  auto ids = component_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

bool Graph::is_connected() const { return component_count() <= 1; }

bool Graph::is_forest() const { return size() == n_ - component_count(); }

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::build(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const Edge& x : b.edges()) e.push_back({x.u + a.order(), x.v + a.order()});
  return Graph::build(a.order() + b.order(), e);
}

}  // namespace rslab
