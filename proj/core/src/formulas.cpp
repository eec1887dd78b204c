#include "rslab/formulas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rslab/error.hpp"
#include "rslab/matcher.hpp"

namespace rslab {

namespace {

long long binom2(long long x) { return x * (x - 1) / 2; }

int need(const FormulaParams& p, const std::string& key) {
  auto it = p.values.find(key);
  if (it == p.values.end()) {
    throw Error(ErrorCode::kInvalidParameter, "formula needs parameter '" + key + "'");
  }
  return it->second;
}

const PatternSpec& need_tree(const FormulaParams& p) {
  if (!p.tree) throw Error(ErrorCode::kInvalidParameter, "formula needs a tree pattern");
  return *p.tree;
}

std::string describe(const FormulaParams& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : p.values) {
    os << (first ? "" : ",") << k << '=' << v;
    first = false;
  }
  if (p.tree) os << (first ? "" : ",") << "T=" << p.tree->to_string();
  return os.str();
}

int diameter(const Graph& t) {
  int best = 0;
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v) best = std::max(best, t.distance(u, v));
  return best;
}

using RowFn = std::function<void(BoundRow&, const FormulaParams&)>;

struct Formula {
  std::string id;
  RowFn fill;
};

const std::vector<Formula>& formulas() {
  static const std::vector<Formula> table = {
      {"path-lower",
       [](BoundRow& r, const FormulaParams& p) {
         r.lower = r.n - 1;
         if (p.tree) {
           const Graph t = p.tree->realize();
           r.in_range = t.is_connected() && contains_copy(t, PatternSpec::path(6)).has_value();
         }
       }},
      {"broom4",
       [](BoundRow& r, const FormulaParams& p) {
         const int m = need(p, "m");
         const int block = 3 * (m + 2);
         r.in_range = m >= 1 && r.n >= block;
         r.lower = r.n - 1;
         const int q = r.n / block;
         r.upper = static_cast<double>(block * q + binom2(r.n - block * q));
       }},
      {"caterpillar-upper",
       [](BoundRow& r, const FormulaParams& p) {
         const int k = need(p, "k");
         const int ell = need(p, "ell");
         r.in_range = ell >= 4 && k >= ell + 2 && r.n >= (k + 1) * (1 << std::max(0, ell - 2));
         r.lower = r.n - 1;
         r.upper = r.n + (ell - 3) * static_cast<double>(1 << std::max(0, ell - 3));
       }},
      {"path-bounds",
       [](BoundRow& r, const FormulaParams& p) {
         const int k = need(p, "k");
         r.in_range = k >= 5 && r.n >= (k + 1) * (1 << std::max(0, k - 4));
         r.lower = r.n - 1;
         if (k == 5) {
           const int q = r.n / 9;
           r.upper = static_cast<double>(9 * q + binom2(r.n - 9 * q));
         } else {
           r.upper = r.n + (k - 5) * static_cast<double>(1 << std::max(0, k - 5));
         }
       }},
      {"caterpillar-converse",
       [](BoundRow& r, const FormulaParams& p) {
         const Graph t = need_tree(p).realize();
         const int rr = converse_r(t);
         r.asymptotic = true;
         r.slope = 1.0 + 1.0 / (12.0 * rr + 52.0);
         bool leafy_degree_two = false;
         for (Vertex v = 0; v < t.order(); ++v) {
           if (t.degree(v) != 2) continue;
           for (Vertex w : t.neighbours(v))
             if (t.degree(w) == 1) leafy_degree_two = true;
         }
         r.in_range = t.is_tree() && diameter(t) >= 4 && !leafy_degree_two;
         r.note = "r=" + std::to_string(rr);
         if (!r.in_range) r.note += "; tree outside the stated hypotheses";
       }},
      {"subdivided-star-prsat",
       [](BoundRow& r, const FormulaParams& p) {
         const int k = need(p, "k");
         r.in_range = k >= 4 && r.n >= k + 3;
         r.exact = r.n - (r.n + k - 1) / (k + 1);
       }},
      {"subdivided-star-sat",
       [](BoundRow& r, const FormulaParams& p) {
         const int k = need(p, "k");
         r.in_range = k >= 5 && r.n >= k + 2;
         r.exact = r.n - (r.n + k - 2) / k;
       }},
      {"double-star-sat",
       [](BoundRow& r, const FormulaParams& p) {
         const int t = need(p, "t");
         const int s = need(p, "s");
         r.in_range = t >= s && s >= 1 && r.n >= (s + 1) * (s + 1) * (s + 1);
         r.lower = s * r.n / 2.0;
         if (t == s) {
           r.upper = s * r.n / 2.0 + t * (t + 2) / 2.0;
         } else {
           r.upper = (s + 1) * r.n / 2.0 - (s * s + 8) / 8.0;
         }
       }},
      {"double-star-improved-sat",
       [](BoundRow& r, const FormulaParams& p) {
         const int t = need(p, "t");
         const int s = need(p, "s");
         r.in_range = t >= s && s >= 1;
         const int m = r.in_range ? (t + s) / s + 1 : 0;
         r.asymptotic = true;
         r.slope = double(m) * s / (double(m) * s + 1) * (s + 1) / 2.0;
         r.note = "m=" + std::to_string(m);
       }},
      {"double-star-prsat-lower",
       [](BoundRow& r, const FormulaParams& p) {
         const int t = need(p, "t");
         const int s = need(p, "s");
         r.in_range = t >= s && s >= 1;
         r.lower = s * r.n / 2.0;
       }},
      {"double-star-prsat-upper",
       [](BoundRow& r, const FormulaParams& p) {
         const int t = need(p, "t");
         const int s = need(p, "s");
         r.in_range = t >= s && s >= 1;
         const int m = r.in_range ? (t + 2 * s) / s + 1 : 0;
         r.asymptotic = true;
         r.slope = double(m) * s / (double(m) * s + 1) * (s + 1) / 2.0;
         r.note = "m=" + std::to_string(m);
       }},
      {"delta2-lower",
       [](BoundRow& r, const FormulaParams& p) {
         const Graph t = need_tree(p).realize();
         const int d2 = tree_second_degree(t);
         const bool star = t.max_degree() == t.order() - 1;
         r.in_range = t.is_tree() && !star && t.order() >= 5 &&
                      r.n >= (d2 - 1) * (d2 - 1) * (d2 - 1);
         r.lower = (d2 - 1) * r.n / 2.0;
         r.note = "delta2=" + std::to_string(d2);
       }},
      {"star",
       [](BoundRow& r, const FormulaParams& p) {
         const int k = need(p, "k");
         r.in_range = k >= 1 && r.n >= k + 1;
         if (r.n >= k + k / 2) {
           r.exact = (k - 1) * r.n / 2.0 - (k * k / 4) / 2.0;
         } else {
           r.exact = static_cast<double>(binom2(k) + binom2(r.n - k));
         }
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> formula_ids() {
  std::vector<std::string> ids;
  for (const auto& f : formulas()) ids.push_back(f.id);
  return ids;
}

std::vector<BoundRow> formula_table(std::string_view id, const FormulaParams& params, int n_lo,
                                    int n_hi) {
  auto it = std::find_if(formulas().begin(), formulas().end(),
                         [&](const Formula& f) { return f.id == id; });
  if (it == formulas().end()) {
    throw Error(ErrorCode::kInvalidParameter, "unknown formula '" + std::string(id) + "'");
  }
  std::vector<BoundRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    BoundRow r;
    r.name = it->id;
    r.parameters = describe(params);
    r.n = n;
    it->fill(r, params);
    if (!r.in_range && r.note.find("outside") == std::string::npos) {
      r.note += std::string(r.note.empty() ? "" : "; ") + "outside the stated range";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

int tree_second_degree(const Graph& t) {
  if (t.order() == 0) throw Error(ErrorCode::kRegularGraph, "empty graph");
  const int lo = t.min_degree();
  int second = -1;
  for (Vertex v = 0; v < t.order(); ++v) {
    const int d = t.degree(v);
    if (d > lo && (second < 0 || d < second)) second = d;
  }
  if (second < 0) throw Error(ErrorCode::kRegularGraph, "regular graph has no second degree");
  return second;
}

int tree_second_degree(const PatternSpec& t) { return tree_second_degree(t.realize()); }

int longest_bare_path(const Graph& t) {
  int best = 0;
  const int n = t.order();
  // Walk outward from every start, only passing through degree-2 vertices.
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex first : t.neighbours(s)) {
      Vertex prev = s;
      Vertex cur = first;
      int len = 1;
      while (t.degree(cur) == 2 && len <= n) {
        const Vertex next = t.neighbours(cur)[0] == prev ? t.neighbours(cur)[1] : t.neighbours(cur)[0];
        if (next == s) break;
        prev = cur;
        cur = next;
        ++len;
      }
      best = std::max(best, len);
    }
  }
  return best;
}

int converse_r(const Graph& t) { return std::max(longest_bare_path(t), 2); }

}  // namespace rslab
