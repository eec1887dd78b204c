#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rslab/graph.hpp"
#include "rslab/pattern.hpp"

namespace rslab {

struct BoundRow {
  std::string name;
  std::string parameters;
  int n = 0;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> exact;
  // Coefficient of n in a bound stated up to an additive O(1).
  std::optional<double> slope;
  bool asymptotic = false;
  // False when (n, parameters) lie outside the stated range; the row is
  // still evaluated.
  bool in_range = true;
  std::string note;
};

struct FormulaParams {
  std::map<std::string, int> values;
  std::optional<PatternSpec> tree;
};

// Known ids:
//   path-lower               prsat(n,H) >= n-1 for connected H containing P_6
//   broom4                   bounds on prsat(n,B_{4,m})               (m)
//   caterpillar-upper        prsat(n,T_{k,ell}) <= n+(ell-3)2^(ell-3)  (k, ell)
//   path-bounds              bounds on prsat(n,P_k)                   (k)
//   caterpillar-converse     slope 1+1/(12r+52), asymptotic           (tree)
//   subdivided-star-prsat    prsat(n,T_k^*) = n - floor((n+k-1)/(k+1)) (k)
//   subdivided-star-sat      sat(n,T_k^*) = n - floor((n+k-2)/k)       (k)
//   double-star-sat          classical bounds on sat(n,S_{t+1,s+1})   (t, s)
//   double-star-improved-sat asymptotic upper slope for sat          (t, s)
//   double-star-prsat-lower  prsat(n,S_{t+1,s+1}) >= s n / 2          (t, s)
//   double-star-prsat-upper  asymptotic upper slope for prsat         (t, s)
//   delta2-lower             prsat >= ssat >= (delta2-1) n / 2        (tree)
//   star                     prsat(n,K_{1,k}) = sat(n,K_{1,k})        (k)
std::vector<std::string> formula_ids();

// One row per n in [n_lo, n_hi]. Throws kInvalidParameter for an unknown id
// or a missing parameter.
std::vector<BoundRow> formula_table(std::string_view id, const FormulaParams& params, int n_lo,
                                    int n_hi);

// Smallest degree strictly above the minimum degree. Throws kRegularGraph.
int tree_second_degree(const Graph& t);
int tree_second_degree(const PatternSpec& t);

// t for the longest path whose internal vertices all have degree 2, and
// r = max(t, 2).
int longest_bare_path(const Graph& t);
int converse_r(const Graph& t);

}  // namespace rslab
