#include "reproduce.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "rslab/canonical.hpp"
#include "rslab/constructions.hpp"
#include "rslab/enumeration.hpp"
#include "rslab/error.hpp"
#include "rslab/formulas.hpp"
#include "rslab/matcher.hpp"
#include "rslab/rainbow.hpp"
#include "rslab/saturation.hpp"

namespace rslab::cli {

namespace {

std::string str(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string census_text(const CensusRecord& r) {
  if (r.status == CensusStatus::kExact) return std::to_string(*r.value);
  if (r.status == CensusStatus::kNone) return "none";
  return "unknown (>= " + std::to_string(r.lower_bound) + ")";
}

class Table {
 public:
  void check(std::string claim, std::string expected, std::string computed, bool ok) {
    rows_.push_back({std::move(claim), std::move(expected), std::move(computed),
                     ok ? RowStatus::kPass : RowStatus::kFail});
  }
  void unknown(std::string claim, std::string expected, std::string computed) {
    rows_.push_back({std::move(claim), std::move(expected), std::move(computed), RowStatus::kUnknown});
  }
  // Compares a census value with an expected integer; Unknown stays Unknown.
  void census(const std::string& claim, const CensusRecord& r, int expected) {
    if (r.status == CensusStatus::kUnknown) {
      unknown(claim, std::to_string(expected), census_text(r));
    } else {
      check(claim, std::to_string(expected), census_text(r), r.value == expected);
    }
  }
  void verdict(const std::string& claim, const SearchVerdict& v, Status want) {
    if (v.status == Status::kUnknown) {
      unknown(claim, std::string(to_string(want)), "Unknown");
    } else {
      check(claim, std::string(to_string(want)), std::string(to_string(v.status)), v.status == want);
    }
  }
  std::vector<ReproRow> take() { return std::move(rows_); }

 private:
  std::vector<ReproRow> rows_;
};

SearchOptions search_opts(const ReproConfig& cfg) {
  SearchOptions o;
  o.budget = cfg.budget;
  return o;
}

SaturationOptions saturation_opts(const ReproConfig& cfg) {
  SaturationOptions o;
  o.search = search_opts(cfg);
  return o;
}

std::vector<ReproRow> formulas_suite(const ReproConfig& cfg) {
  Table t;
  FormulaParams k4{{{"k", 4}}, {}};
  for (int n = 7; n <= 8; ++n) {
    const double exact = *formula_table("subdivided-star-prsat", k4, n, n)[0].exact;
    t.census("prsat(" + std::to_string(n) + ",P4) = n - floor((n+3)/5)",
             prsat_number(n, PatternSpec::path(4), cfg.census), static_cast<int>(exact));
  }
  FormulaParams k5{{{"k", 5}}, {}};
  for (int n = 7; n <= 9; ++n) {
    const double exact = *formula_table("subdivided-star-sat", k5, n, n)[0].exact;
    t.census("sat(" + std::to_string(n) + ",T5star) = n - floor((n+3)/5)",
             sat_number(n, PatternSpec::subdivided_star(5), cfg.census), static_cast<int>(exact));
  }
  FormulaParams k3{{{"k", 3}}, {}};
  for (int n = 4; n <= 7; ++n) {
    const int exact = static_cast<int>(*formula_table("star", k3, n, n)[0].exact);
    const std::string at = "(" + std::to_string(n) + ",K1,3)";
    t.census("sat" + at + " = star formula", sat_number(n, PatternSpec::star(3), cfg.census), exact);
    t.census("prsat" + at + " = star formula", prsat_number(n, PatternSpec::star(3), cfg.census), exact);
  }
  for (int n = 5; n <= 6; ++n) {
    auto r = prsat_number(n, PatternSpec::path(5), cfg.census);
    const std::string claim = "prsat(" + std::to_string(n) + ",P5) >= n-1";
    if (r.status == CensusStatus::kUnknown) {
      // every class below lower_bound was refuted
      if (r.lower_bound >= n - 1) {
        t.check(claim, ">= " + std::to_string(n - 1), census_text(r), true);
      } else {
        t.unknown(claim, ">= " + std::to_string(n - 1), census_text(r));
      }
    } else {
      t.check(claim, ">= " + std::to_string(n - 1), census_text(r), r.value && *r.value >= n - 1);
    }
  }

  FormulaParams spider;
  const std::vector<Edge> legs = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  spider.tree = PatternSpec::explicit_graph(Graph::build(7, legs));
  const auto row = formula_table("caterpillar-converse", spider, 100, 100)[0];
  t.check("spider with legs of length 2: slope 1 + 1/(12r+52), r = 2", str(1.0 + 1.0 / 76),
          str(*row.slope), row.asymptotic && *row.slope == 1.0 + 1.0 / 76);

  int bad = 0, rows = 0;
  const std::vector<std::pair<std::string, FormulaParams>> ranged = {
      {"broom4", {{{"m", 1}}, {}}},          {"broom4", {{{"m", 2}}, {}}},
      {"path-bounds", {{{"k", 5}}, {}}},     {"path-bounds", {{{"k", 6}}, {}}},
      {"caterpillar-upper", {{{"k", 6}, {"ell", 4}}, {}}},
      {"double-star-sat", {{{"t", 2}, {"s", 1}}, {}}},
      {"double-star-sat", {{{"t", 2}, {"s", 2}}, {}}},
      {"star", {{{"k", 4}}, {}}}};
  for (const auto& [id, params] : ranged) {
    for (const auto& r : formula_table(id, params, 1, 120)) {
      if (r.asymptotic || !r.in_range) continue;
      ++rows;
      if (r.lower && r.upper && *r.lower > *r.upper) ++bad;
    }
  }
  t.check("lower <= upper on every non-asymptotic in-range row", "0 violations",
          std::to_string(bad) + " violations in " + std::to_string(rows) + " rows", bad == 0);

  for (const auto& tree : {PatternSpec::path(5), PatternSpec::broom(4, 1), PatternSpec::double_star(2, 1)}) {
    FormulaParams p;
    p.tree = tree;
    for (int n = 5; n <= 7; ++n) {
      const double lower = *formula_table("delta2-lower", p, n, n)[0].lower;
      auto r = prsat_number(n, tree, cfg.census);
      const std::string claim = "(delta2-1)n/2 <= prsat(" + std::to_string(n) + "," + tree.to_string() + ")";
      if (r.status == CensusStatus::kUnknown) {
        t.unknown(claim, ">= " + str(lower), census_text(r));
      } else if (r.status == CensusStatus::kNone) {
        t.check(claim, ">= " + str(lower), "none (vacuous)", true);
      } else {
        t.check(claim, ">= " + str(lower), census_text(r), *r.value >= lower);
      }
    }
  }
  return t.take();
}

std::vector<ReproRow> constructions_suite(const ReproConfig& cfg) {
  Table t;
  for (int ell = 4; ell <= 7; ++ell) {
    auto b = folded_cube(ell);
    const bool regular = b.graph.min_degree() == ell - 1 && b.graph.max_degree() == ell - 1;
    const bool proper = is_proper(b.graph, b.colouring);
    const bool free = !find_rainbow_copy(b.graph, b.colouring, PatternSpec::path(ell));
    std::ostringstream got;
    got << b.graph.order() << " vertices, " << b.colouring.colour_count() << " colours, "
        << (proper ? "proper" : "improper") << ", " << (free ? "no rainbow" : "has rainbow") << " P"
        << ell;
    t.check("folded cube for P" + std::to_string(ell),
            std::to_string(1 << (ell - 2)) + " vertices, " + std::to_string(ell - 1) +
                " colours, proper, no rainbow P" + std::to_string(ell),
            got.str(),
            regular && proper && free && b.graph.order() == (1 << (ell - 2)) &&
                b.colouring.colour_count() == ell - 1);
  }
  for (int ell = 4; ell <= 5; ++ell) {
    auto b = folded_cube(ell);
    const int d = ell - 2;
    std::vector<Edge> cube;
    for (int x = 0; x < (1 << d); ++x)
      for (int i = 0; i < d; ++i)
        if (!(x & (1 << i))) cube.push_back({x, x | (1 << i)});
    const auto target = canonical_form(Graph::build(1 << d, cube));
    int hits = 0;
    for (int c = 1; c <= ell - 1; ++c) {
      std::vector<Edge> keep;
      for (int e = 0; e < b.graph.size(); ++e)
        if (b.colouring[e] != c) keep.push_back(b.graph.edge(e));
      if (canonical_form(Graph::build(b.graph.order(), keep)) == target) ++hits;
    }
    t.check("folded cube for P" + std::to_string(ell) + " minus any direction is Q" + std::to_string(d),
            std::to_string(ell - 1) + "/" + std::to_string(ell - 1),
            std::to_string(hits) + "/" + std::to_string(ell - 1), hits == ell - 1);
  }
  for (int m = 1; m <= 2; ++m) {
    auto b = broom_gadget(m);
    const bool ok = is_proper(b.graph, b.colouring) &&
                    !find_rainbow_copy(b.graph, b.colouring, PatternSpec::broom(4, m));
    std::ostringstream got;
    got << b.graph.order() << "v " << b.graph.size() << "e " << b.colouring.colour_count() << "c"
        << (ok ? ", proper and rainbow-free" : ", certificate broken");
    std::ostringstream want;
    want << 3 * (m + 2) << "v " << 3 * (m + 1) + 3 << "e " << m + 3 << "c, proper and rainbow-free";
    t.check("broom gadget m=" + std::to_string(m), want.str(), got.str(), got.str() == want.str());
  }
  t.verdict("broom_saturated(9,1) is properly rainbow B4,1-saturated",
            is_properly_rainbow_saturated(broom_saturated(9, 1, cfg.census), PatternSpec::broom(4, 1),
                                          saturation_opts(cfg)),
            Status::kEstablished);
  for (auto [n, e] : {std::pair{18, 18}, std::pair{10, 9}}) {
    const int got = broom_saturated(n, 1, cfg.census).size();
    t.check("broom_saturated(" + std::to_string(n) + ",1) edge count", std::to_string(e),
            std::to_string(got), got == e);
  }
  {
    auto c = caterpillar_construction(28, 6, 4);
    const bool ok = c.graph.size() == 30 && is_proper(c.graph, c.colouring) &&
                    !find_rainbow_copy(c.graph, c.colouring, PatternSpec::path(6));
    t.check("caterpillar construction n=28 k=6 ell=4", "30 edges, rainbow-P6-free colouring",
            std::to_string(c.graph.size()) + " edges" + (ok ? ", rainbow-P6-free colouring" : ""), ok);
    auto c64 = caterpillar_construction(64, 7, 5);
    t.check("caterpillar construction n=64 k=7 ell=5", "72 edges",
            std::to_string(c64.graph.size()) + " edges", c64.graph.size() == 72);
  }
  {
    Graph sf = star_forest(10, 4);
    t.check("star_forest(10,4) edge count", "8", std::to_string(sf.size()), sf.size() == 8);
    t.verdict("star_forest(10,4) is properly rainbow P4-saturated",
              is_properly_rainbow_saturated(sf, PatternSpec::path(4), saturation_opts(cfg)),
              Status::kEstablished);
    const int s7 = star_forest(7, 4).size();
    t.check("star_forest(7,4) edge count", "5", std::to_string(s7), s7 == 5);
  }
  for (auto [n, tt, s] : {std::tuple{10, 2, 1}, std::tuple{8, 1, 1}}) {
    Graph g = double_star_construction(n, tt, s, DoubleStarVariant::kSat);
    const bool sat = is_saturated(g, PatternSpec::double_star(tt, s)).holds;
    t.check("double star construction n=" + std::to_string(n) + " is S" + std::to_string(tt + 1) +
                "," + std::to_string(s + 1) + "-saturated",
            "saturated", sat ? "saturated" : "not saturated", sat);
  }
  return t.take();
}

// Simple path from x on `vertices` vertices with distinct colours, avoiding
// the given colour and vertex (either may be absent).
bool anchored_rainbow_path(const Graph& g, const EdgeColouring& c, Vertex x, int vertices,
                           int avoid_colour, Vertex avoid_vertex) {
  std::vector<char> used_v(g.order(), 0);
  std::set<int> used_c;
  std::function<bool(Vertex, int)> go = [&](Vertex v, int have) {
    if (have == vertices) return true;
    const auto nb = g.neighbours(v);
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex w = nb[i];
      const int col = c[inc[i]];
      if (used_v[w] || w == avoid_vertex || col == avoid_colour || used_c.count(col)) continue;
      used_v[w] = 1;
      used_c.insert(col);
      if (go(w, have + 1)) return true;
      used_v[w] = 0;
      used_c.erase(col);
    }
    return false;
  };
  if (x == avoid_vertex) return false;
  used_v[x] = 1;
  return go(x, 1);
}

std::vector<ReproRow> lemma_suite(const ReproConfig& cfg) {
  const int ell = cfg.ell;
  if (ell < 4 || ell > 6) throw Error(ErrorCode::kInvalidParameter, "lemma4 supports 4 <= ell <= 6");
  Table t;
  const Graph f = folded_cube(ell).graph;
  const Graph path = PatternSpec::path(ell).realize();
  const std::string tag = "folded cube for P" + std::to_string(ell) + ": ";

  int total = 0, wrong_count = 0, missing_colour_path = 0, missing_vertex_path = 0;
  const Status s = enumerate_rainbow_free_colourings(
      f, path,
      [&](const EdgeColouring& c) {
        ++total;
        if (c.colour_count() != ell - 1) ++wrong_count;
        bool p2 = true, p3 = true;
        for (Vertex x = 0; x < f.order(); ++x) {
          for (int col = 1; col <= c.colour_count() && p2; ++col)
            if (!anchored_rainbow_path(f, c, x, ell - 1, col, -1)) p2 = false;
          for (Vertex y = 0; y < f.order() && p3; ++y)
            if (y != x && !anchored_rainbow_path(f, c, x, ell - 1, 0, y)) p3 = false;
        }
        if (!p2) ++missing_colour_path;
        if (!p3) ++missing_vertex_path;
        return true;
      },
      cfg.budget);

  const std::string seen = std::to_string(total) + " rainbow-free colourings";
  auto row = [&](const std::string& claim, int failures) {
    if (s == Status::kUnknown) {
      t.unknown(tag + claim, "all colourings", "budget exhausted after " + seen);
    } else {
      t.check(tag + claim, "all of " + seen,
              std::to_string(total - failures) + " of " + seen, failures == 0 && total > 0);
    }
  };
  row("(1) every rainbow-free proper colouring uses " + std::to_string(ell - 1) + " colours",
      wrong_count);
  row("(2) rainbow " + std::to_string(ell - 1) + "-vertex path from each vertex avoiding each colour",
      missing_colour_path);
  row("(3) rainbow " + std::to_string(ell - 1) + "-vertex path from each vertex avoiding each other vertex",
      missing_vertex_path);
  t.verdict(tag + "(4) properly rainbow P" + std::to_string(ell) + "-saturated",
            is_properly_rainbow_saturated(f, PatternSpec::path(ell), saturation_opts(cfg)),
            Status::kEstablished);
  return t.take();
}

std::vector<ReproRow> census_suite(const ReproConfig& cfg) {
  Table t;
  for (int n = 7; n <= 8; ++n)
    t.census("prsat(" + std::to_string(n) + ",P4)", prsat_number(n, PatternSpec::path(4), cfg.census),
             n - (n + 3) / 5);
  for (int n = 7; n <= 9; ++n)
    t.census("sat(" + std::to_string(n) + ",T5star)",
             sat_number(n, PatternSpec::subdivided_star(5), cfg.census), n - (n + 3) / 5);
  t.census("prsat(6,K1,3)", prsat_number(6, PatternSpec::star(3), cfg.census), 5);
  t.census("sat(6,K1,3)", sat_number(6, PatternSpec::star(3), cfg.census), 5);

  const std::vector<int> tree_counts = {1, 2, 3, 6, 11, 23};
  for (int n = 3; n <= 8; ++n) {
    const auto trees = enumerate_trees(n);
    int refuted = 0, unknown = 0;
    for (const Graph& tr : trees) {
      const Status st = is_properly_rainbow_saturated(tr, PatternSpec::path(6), saturation_opts(cfg)).status;
      if (st == Status::kRefuted) ++refuted;
      if (st == Status::kUnknown) ++unknown;
    }
    const std::string claim = "no tree on " + std::to_string(n) + " vertices is properly rainbow P6-saturated";
    const std::string want = std::to_string(tree_counts[n - 3]) + "/" + std::to_string(tree_counts[n - 3]) + " refuted";
    const std::string got = std::to_string(refuted) + "/" + std::to_string(trees.size()) + " refuted";
    if (unknown > 0 && refuted + unknown == static_cast<int>(trees.size())) {
      t.unknown(claim, want, got);
    } else {
      t.check(claim, want, got, got == want);
    }
  }

  for (int n = 5; n <= 6; ++n) {
    auto r = prsat_number(n, PatternSpec::path(5), cfg.census);
    const std::string claim = "prsat(" + std::to_string(n) + ",P5) >= " + std::to_string(n - 1);
    const bool ok = r.value ? *r.value >= n - 1 : r.lower_bound >= n - 1;
    t.check(claim, ">= " + std::to_string(n - 1), census_text(r), ok);
  }

  int points = 0, violations = 0, undecided = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const auto& p : {PatternSpec::path(4), PatternSpec::path(5), PatternSpec::star(3)}) {
      auto sat = sat_number(n, p, cfg.census);
      auto ssat = ssat_number(n, p, cfg.census);
      auto prsat = prsat_number(n, p, cfg.census);
      ++points;
      if (prsat.status == CensusStatus::kUnknown) ++undecided;
      if (sat.value && *ssat.value > *sat.value) ++violations;
      if (prsat.value && *ssat.value > *prsat.value) ++violations;
    }
  }
  const std::string got = std::to_string(violations) + " violations at " + std::to_string(points) + " points";
  if (violations == 0 && undecided > 0) {
    t.unknown("ssat <= sat and ssat <= prsat", "0 violations", got + ", " + std::to_string(undecided) + " undecided");
  } else {
    t.check("ssat <= sat and ssat <= prsat", "0 violations", got, violations == 0);
  }
  return t.take();
}

}  // namespace

std::vector<std::string> suite_names() { return {"formulas", "constructions", "lemma4", "census"}; }

std::vector<ReproRow> run_suite(const std::string& suite, const ReproConfig& cfg) {
  if (suite == "formulas") return formulas_suite(cfg);
  if (suite == "constructions") return constructions_suite(cfg);
  if (suite == "lemma4") return lemma_suite(cfg);
  if (suite == "census") return census_suite(cfg);
  throw Error(ErrorCode::kInvalidParameter, "unknown suite '" + suite + "'");
}

}  // namespace rslab::cli
