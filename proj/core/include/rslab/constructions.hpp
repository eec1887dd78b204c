#pragma once

#include <string>

#include "rslab/census.hpp"
#include "rslab/colouring.hpp"
#include "rslab/graph.hpp"

namespace rslab {

struct GadgetBundle {
  Graph graph;
  EdgeColouring colouring;
  std::string provenance;
};

// Folded cube F_{ell-1}: vertices are the integers 0..2^(ell-2)-1 read as
// bit vectors, x ~ y when x xor y is a unit vector or all-ones. Edge xy gets
// colour i+1 for direction e_i and ell-1 for all-ones, which is the
// difference colouring. Requires ell >= 4.
GadgetBundle folded_cube(int ell);

// Triangle x_1 x_2 x_3 (vertices 0, 1, 2) with pendants y_{i,0..m} on each
// x_i; y_{i,j} is vertex 3 + (i-1)(m+1) + j. Colours: x_i y_{i,0} and the
// opposite triangle edge get i, x_i y_{i,l} gets l + 3.
GadgetBundle broom_gadget(int m);

// floor(n / 3(m+2)) gadget copies plus, for the remainder r, the least
// witness of the prsat census for B_{4,m} on r vertices (K_r when r < 3).
// Throws kOracleBudgetExceeded if that census is undecided or out of reach.
Graph broom_saturated(int n, int m, const CensusOptions& remainder_census = {});

// F_{ell-1} with n - 2^(ell-2) pendants, pendant p (vertex 2^(ell-2) + p)
// hanging off cube vertex p mod 2^(ell-2). The colouring extends the cube
// colouring with ell, ell+1, ... on the pendant edges at each cube vertex.
GadgetBundle caterpillar_construction(int n, int k, int ell);

// Star forest with floor((n+k-1)/(k+1)) components that is
// T_{k+1}^*-saturated, checked with is_saturated before it is returned.
Graph star_forest(int n, int k);

enum class DoubleStarVariant { kSat, kPrsat };

// m(t, s) = ceil((t+1)/s) + 1.
int double_star_m(int t, int s);

// a(K_1 + m K_s) + b(K_1 + (m+1) K_s) on n vertices with b minimal, where m
// is m(t, s) for kSat and m(t+s, s) for kPrsat. Each component is listed as
// its centre followed by the vertices of its cliques.
Graph double_star_construction(int n, int t, int s, DoubleStarVariant variant);

}  // namespace rslab
