#include "rslab/rainbow.hpp"

#include <algorithm>
#include <deque>

namespace rslab {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kEstablished: return "Established";
    case Status::kRefuted: return "Refuted";
    case Status::kUnknown: return "Unknown";
  }
  return "?";
}

std::vector<int> search_edge_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> order;
  std::vector<char> edge_seen(g.size(), 0), visited(n, 0);
  auto start_from = [&](Vertex root) {
    std::deque<Vertex> queue{root};
    visited[root] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      auto nbrs = g.neighbours(v);
      auto ids = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (!edge_seen[ids[i]]) {
          edge_seen[ids[i]] = 1;
          order.push_back(ids[i]);
        }
        if (!visited[nbrs[i]]) {
          visited[nbrs[i]] = 1;
          queue.push_back(nbrs[i]);
        }
      }
    }
  };
  while (static_cast<int>(order.size()) < g.size()) {
    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && g.degree(v) > 0 && (root < 0 || g.degree(v) > g.degree(root))) root = v;
    }
    start_from(root);
  }
  return order;
}

namespace {

class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, const Graph& h, bool break_symmetry, bool prune)
      : g_(g),
        matcher_(g, h),
        order_(search_edge_order(g)),
        colour_(g.size(), 0),
        previous_sibling_(g.size(), -1),
        prune_(prune) {
    if (break_symmetry) {
      // last pendant edge seen at each vertex, in search order
      std::vector<int> last(g.order(), -1);
      for (std::size_t pos = 0; pos < order_.size(); ++pos) {
        const Edge& e = g.edge(order_[pos]);
        Vertex centre = -1;
        if (g.degree(e.u) == 1 && g.degree(e.v) > 1) centre = e.v;
        if (g.degree(e.v) == 1 && g.degree(e.u) > 1) centre = e.u;
        if (centre < 0) continue;
        previous_sibling_[pos] = last[centre];
        last[centre] = order_[pos];
      }
    }
  }

  // Returns false when stopped (visitor declined or budget hit).
  template <class Visit>
  bool run(std::size_t pos, int max_colour, Visit& visit) {
    if (pos == order_.size()) return visit(colour_);
    const int id = order_[pos];
    const Edge& e = g_.edge(id);
    int lo = 1;
    if (previous_sibling_[pos] >= 0) lo = colour_[previous_sibling_[pos]] + 1;
    for (int c = lo; c <= max_colour + 1; ++c) {
      if (clashes(e, c)) continue;
      if (nodes_ == budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      colour_[id] = c;
      if (!prune_ || !matcher_.rainbow_copy_through(colour_.data(), id)) {
        if (!run(pos + 1, std::max(max_colour, c), visit)) {
          colour_[id] = 0;
          return false;
        }
      }
      colour_[id] = 0;
    }
    return true;
  }

  void set_budget(std::uint64_t b) { budget_ = b; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  bool clashes(const Edge& e, int c) const {
    for (int other : g_.incident_edges(e.u))
      if (colour_[other] == c) return true;
    for (int other : g_.incident_edges(e.v))
      if (colour_[other] == c) return true;
    return false;
  }

  const Graph& g_;
  Matcher matcher_;
  std::vector<int> order_;
  std::vector<int> colour_;
  std::vector<int> previous_sibling_;
  bool prune_;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SearchVerdict search_rainbow_free_colouring(const Graph& g, const Graph& h,
                                            const SearchOptions& opts) {
  SearchVerdict out;
  out.budget = opts.budget;
  out.degenerate = g.order() < h.order();
  ColouringSearch search(g, h, opts.break_leaf_symmetry, true);
  search.set_budget(opts.budget);
  std::optional<std::vector<int>> found;
  auto visit = [&](const std::vector<int>& colours) {
    found = colours;
    return false;
  };
  search.run(0, 0, visit);
  out.nodes_explored = search.nodes();
  if (found) {
    out.status = Status::kEstablished;
    out.colouring = EdgeColouring(*found);
  } else {
    out.status = search.exhausted() ? Status::kUnknown : Status::kRefuted;
  }
  return out;
}

SearchVerdict search_rainbow_free_colouring(const Graph& g, const PatternSpec& h,
                                            const SearchOptions& opts) {
  return search_rainbow_free_colouring(g, h.realize(), opts);
}

SearchVerdict forces_rainbow(const Graph& g, const Graph& h, const SearchOptions& opts) {
  SearchVerdict v = search_rainbow_free_colouring(g, h, opts);
  if (v.status == Status::kEstablished) {
    v.status = Status::kRefuted;
  } else if (v.status == Status::kRefuted) {
    v.status = Status::kEstablished;
  }
  return v;
}

SearchVerdict forces_rainbow(const Graph& g, const PatternSpec& h, const SearchOptions& opts) {
  return forces_rainbow(g, h.realize(), opts);
}

Status enumerate_rainbow_free_colourings(const Graph& g, const Graph& h,
                                         const std::function<bool(const EdgeColouring&)>& visit,
                                         std::uint64_t budget) {
  ColouringSearch search(g, h, false, true);
  search.set_budget(budget);
  bool any = false;
  auto wrapped = [&](const std::vector<int>& colours) {
    any = true;
    return visit(EdgeColouring(colours));
  };
  search.run(0, 0, wrapped);
  if (search.exhausted()) return Status::kUnknown;
  return any ? Status::kEstablished : Status::kRefuted;
}

std::uint64_t count_proper_colourings(const Graph& g) {
  ColouringSearch search(g, Graph(0), false, false);
  search.set_budget(UINT64_MAX);
  std::uint64_t count = 0;
  auto visit = [&](const std::vector<int>&) {
    ++count;
    return true;
  };
  search.run(0, 0, visit);
  return count;
}

}  // namespace rslab
