#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rslab/canonical.hpp"
#include "rslab/error.hpp"
#include "rslab/graph.hpp"
#include "rslab/graph_io.hpp"
#include "rslab/pattern.hpp"

using namespace rslab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidParameter;
}

Graph path_graph(int k) { return PatternSpec::path(k).realize(); }

}  // namespace

TEST(Graph, BuildTriangle) {
  const Edge e[] = {{0, 1}, {1, 2}, {0, 2}};
  Graph g = Graph::build(3, e);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g, complete_graph(3));
  EXPECT_TRUE(g.non_edges().empty());
}

TEST(Graph, SingleVertex) {
  Graph g = Graph::build(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
  EXPECT_TRUE(g.is_tree());
}

TEST(Graph, RejectsBadInput) {
  const Edge dup[] = {{0, 1}, {0, 1}};
  EXPECT_EQ(code_of([&] { Graph::build(4, dup); }), ErrorCode::kDuplicateEdge);
  const Edge flipped[] = {{0, 1}, {1, 0}};
  EXPECT_EQ(code_of([&] { Graph::build(4, flipped); }), ErrorCode::kDuplicateEdge);
  const Edge loop[] = {{2, 2}};
  EXPECT_EQ(code_of([&] { Graph::build(4, loop); }), ErrorCode::kSelfLoop);
  const Edge far[] = {{0, 4}};
  EXPECT_EQ(code_of([&] { Graph::build(4, far); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(code_of([] { Graph(-1); }), ErrorCode::kInvalidParameter);
}

TEST(Graph, AdjacencyMatchesEdges) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(rng, 7, 0.4);
    int degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      auto nb = g.neighbours(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (std::size_t i = 0; i < nb.size(); ++i) {
        EXPECT_EQ(g.edge_index(v, nb[i]), g.incident_edges(v)[i]);
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.size());
    EXPECT_EQ(static_cast<int>(g.non_edges().size()) + g.size(), 21);
  }
}

TEST(Graph, DistancesAndComponents) {
  Graph p = path_graph(5);
  EXPECT_EQ(p.distance(0, 4), 4);
  EXPECT_EQ(p.distance(2, 2), 0);
  Graph two = disjoint_union(p, complete_graph(2));
  EXPECT_EQ(two.order(), 7);
  EXPECT_EQ(two.distance(0, 6), -1);
  EXPECT_EQ(two.component_count(), 2);
  EXPECT_TRUE(two.is_forest());
  EXPECT_FALSE(two.is_tree());
  EXPECT_EQ(two.degree_sequence(), (std::vector<int>{2, 2, 2, 1, 1, 1, 1}));
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(from_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, LongSizeForm) {
  Graph g = path_graph(70);
  std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(from_graph6(s), g);
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937 rng(5);
  for (int n = 0; n < 20; ++n) {
    Graph g = oracle::random_graph(rng, n, 0.3);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_EQ(code_of([] { from_graph6("C"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { from_graph6("C~~"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { from_graph6(""); }), ErrorCode::kParseError);
  // K_3 needs 3 bits; a set padding bit is invalid
  EXPECT_EQ(code_of([] { from_graph6("Bx"); }), ErrorCode::kParseError);
}

TEST(Json, GraphRoundTrip) {
  Graph g = path_graph(4);
  EXPECT_EQ(to_json(g), R"({"edges":[[0,1],[1,2],[2,3]],"n":4})");
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  EXPECT_EQ(parse_graph(to_json(g)), g);
  EXPECT_EQ(parse_graph("Ch\nignored"), g);
  EXPECT_EQ(code_of([] { graph_from_json("{\"n\":2,\"edges\":[[0]]}"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { graph_from_json("{oops"); }), ErrorCode::kParseError);
}

TEST(Json, ColouredGraphAcceptsAnyEdgeOrder) {
  auto cg = coloured_graph_from_json(R"({"n":3,"edges":[[1,2],[0,1]],"colours":[7,3]})");
  EXPECT_EQ(cg.graph.edge(0), (Edge{0, 1}));
  EXPECT_EQ(cg.colouring.colours(), (std::vector<int>{3, 7}));
  EXPECT_EQ(coloured_graph_from_json(to_json(cg)).colouring, cg.colouring);
  EXPECT_EQ(code_of([] { coloured_graph_from_json(R"({"n":2,"edges":[[0,1]],"colours":[]})"); }),
            ErrorCode::kMissingEdgeColour);
}

TEST(Dot, ListsEdgesWithColours) {
  Graph g = path_graph(3);
  EdgeColouring c({1, 2});
  std::string dot = to_dot(g, &c);
  EXPECT_NE(dot.find("0 -- 1 [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [label=\"2\"]"), std::string::npos);
}

TEST(Pattern, Realisations) {
  Graph t4 = PatternSpec::subdivided_star(4).realize();
  EXPECT_EQ(canonical_form(t4), canonical_form(path_graph(4)));
  EXPECT_EQ(canonical_form(PatternSpec::double_star(1, 1).realize()),
            canonical_form(path_graph(4)));
  Graph b = PatternSpec::broom(4, 2).realize();
  EXPECT_EQ(b.order(), 6);
  EXPECT_EQ(b.size(), 5);
  EXPECT_EQ(b.degree_sequence(), (std::vector<int>{3, 2, 2, 1, 1, 1}));
  EXPECT_EQ(b.degree(0), 3);
  Graph star = PatternSpec::star(5).realize();
  EXPECT_EQ(star.degree(0), 5);
  Graph ds = PatternSpec::double_star(2, 1).realize();
  EXPECT_EQ(ds.degree(0), 3);
  EXPECT_EQ(ds.degree(1), 2);
  Graph cat = PatternSpec::caterpillar({1, 0, 0, 1}).realize();
  EXPECT_EQ(canonical_form(cat), canonical_form(path_graph(6)));
}

TEST(Pattern, FamiliesAreTrees) {
  std::vector<PatternSpec> specs;
  for (int k = 2; k <= 8; ++k) specs.push_back(PatternSpec::path(k));
  for (int k = 1; k <= 6; ++k) specs.push_back(PatternSpec::star(k));
  for (int k = 4; k <= 8; ++k) specs.push_back(PatternSpec::subdivided_star(k));
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 3; ++m) specs.push_back(PatternSpec::broom(k, m));
  for (int t = 0; t <= 3; ++t)
    for (int s = 0; s <= 3; ++s) specs.push_back(PatternSpec::double_star(t, s));
  specs.push_back(PatternSpec::caterpillar({2, 0, 3}));
  for (const auto& p : specs) {
    Graph g = p.realize();
    EXPECT_EQ(g.size(), g.order() - 1) << p.to_string();
    EXPECT_TRUE(g.is_connected()) << p.to_string();
    EXPECT_EQ(g.order(), p.vertex_count()) << p.to_string();
  }
  for (int k = 2; k <= 8; ++k) {
    Graph g = PatternSpec::path(k).realize();
    EXPECT_EQ(g.size(), k - 1);
    EXPECT_LE(g.max_degree(), 2);
  }
  for (int k = 1; k <= 6; ++k) {
    Graph g = PatternSpec::star(k).realize();
    EXPECT_EQ(g.size(), k);
    EXPECT_EQ(g.max_degree(), k);
  }
}

TEST(Pattern, ParseAndPrint) {
  for (std::string s : {"P5", "K1,4", "B4,2", "T5star", "S3,2", "g6:Ch"}) {
    EXPECT_EQ(PatternSpec::parse(s).to_string(), s);
  }
  EXPECT_EQ(PatternSpec::parse("S3,2"), PatternSpec::double_star(2, 1));
  auto cat = PatternSpec::parse("cat:\xE2\x84\x93=4;leaves=1,0,0,1");
  EXPECT_EQ(cat, PatternSpec::caterpillar({1, 0, 0, 1}));
  EXPECT_EQ(PatternSpec::parse("cat:l=4;leaves=1,0,0,1"), cat);
  EXPECT_EQ(PatternSpec::parse(cat.to_string()), cat);
}

TEST(Pattern, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { PatternSpec::subdivided_star(3); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { PatternSpec::path(1); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { PatternSpec::broom(0, 1); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { PatternSpec::explicit_graph(Graph(3)); }), ErrorCode::kInvalidParameter);
  // isolated vertex 2
  EXPECT_EQ(code_of([] { PatternSpec::parse("g6:B_"); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of([] { PatternSpec::parse("Q7"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { PatternSpec::parse("cat:l=3;leaves=1,1"); }),
            ErrorCode::kInvalidParameter);
}

TEST(Canonical, RelabelledPathsAgree) {
  const Edge a[] = {{0, 1}, {1, 2}, {2, 3}};
  const Edge b[] = {{2, 0}, {0, 3}, {3, 1}};
  EXPECT_EQ(canonical_form(Graph::build(4, a)), canonical_form(Graph::build(4, b)));
  EXPECT_NE(canonical_form(path_graph(4)), canonical_form(PatternSpec::star(3).realize()));
}

TEST(Canonical, ElevenClassesOnFourVertices) {
  std::set<CanonicalLabel> labels;
  std::set<std::uint64_t> brute;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    Graph g = oracle::graph_of_mask(4, mask);
    labels.insert(canonical_form(g));
    brute.insert(oracle::brute_canonical(g));
  }
  EXPECT_EQ(brute.size(), 11u);
  EXPECT_EQ(labels.size(), 11u);
}

// Exhaustive agreement with the permutation oracle for every labelled graph
// on up to 5 vertices, and a random sample on 6 and 7.
TEST(Canonical, AgreesWithBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    std::map<CanonicalLabel, std::uint64_t> seen;
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      Graph g = oracle::graph_of_mask(n, mask);
      const std::uint64_t b = oracle::brute_canonical(g);
      auto [it, fresh] = seen.emplace(canonical_form(g), b);
      ASSERT_EQ(it->second, b) << "n=" << n << " mask=" << mask;
    }
    std::set<std::uint64_t> distinct;
    for (auto& [label, b] : seen) distinct.insert(b);
    EXPECT_EQ(distinct.size(), seen.size());
  }
  std::mt19937 rng(2024);
  for (int n = 6; n <= 7; ++n) {
    std::map<CanonicalLabel, std::uint64_t> seen;
    std::map<std::uint64_t, CanonicalLabel> back;
    for (int trial = 0; trial < 150; ++trial) {
      Graph g = oracle::random_graph(rng, n, 0.5);
      const std::uint64_t b = oracle::brute_canonical(g);
      CanonicalLabel c = canonical_form(g);
      auto [it, fresh] = seen.emplace(c, b);
      ASSERT_EQ(it->second, b);
      auto [jt, fresh2] = back.emplace(b, c);
      ASSERT_EQ(jt->second, c);
    }
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 12;
    Graph g = oracle::random_graph(rng, n, 0.35);
    Graph h = g.relabelled(oracle::random_permutation(rng, n));
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << to_graph6(g);
    ASSERT_EQ(canonical_graph(g), canonical_graph(h));
    CanonicalResult r = canonical_labelling(g);
    EXPECT_EQ(to_graph6(g.relabelled(r.labelling)), r.label.bytes);
  }
}

TEST(Canonical, RegularAndSymmetricGraphs) {
  // Petersen graph and the 5-prism are both 3-regular on 10 vertices.
  std::vector<Edge> petersen, prism;
  for (int i = 0; i < 5; ++i) {
    petersen.push_back({i, (i + 1) % 5});
    petersen.push_back({i, i + 5});
    petersen.push_back({5 + i, 5 + (i + 2) % 5});
    prism.push_back({i, (i + 1) % 5});
    prism.push_back({i, i + 5});
    prism.push_back({5 + i, 5 + (i + 1) % 5});
  }
  Graph p = Graph::build(10, petersen);
  Graph q = Graph::build(10, prism);
  EXPECT_NE(canonical_form(p), canonical_form(q));
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(canonical_form(p), canonical_form(p.relabelled(oracle::random_permutation(rng, 10))));
  }
  EXPECT_EQ(all_automorphisms(p).size(), 120u);
  EXPECT_EQ(all_automorphisms(q).size(), 20u);
}

TEST(Canonical, GeneratorsAreAutomorphisms) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(rng, 6, 0.5);
    for (const auto& p : automorphism_generators(g)) EXPECT_EQ(g.relabelled(p), g);
  }
}

TEST(PairOrbits, SmallExamples) {
  auto k4 = pair_orbits(complete_graph(4));
  EXPECT_EQ(k4.size(), 1u);
  EXPECT_TRUE(non_edge_orbit_representatives(complete_graph(4)).empty());

  auto p3 = pair_orbits(path_graph(3));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3[0], (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(p3[1], (std::vector<Edge>{{0, 2}}));

  Graph k13 = PatternSpec::star(3).realize();
  auto reps = non_edge_orbit_representatives(k13);
  ASSERT_EQ(reps.size(), 1u);
  for (const auto& orbit : pair_orbits(k13)) {
    if (!k13.adjacent(orbit[0].u, orbit[0].v)) EXPECT_EQ(orbit.size(), 3u);
  }
  // frozen from the 24-permutation oracle
  EXPECT_EQ(oracle::brute_automorphisms(k13).size(), 6u);
}

TEST(PairOrbits, AgreeWithBruteForce) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 5;
    Graph g = oracle::random_graph(rng, n, 0.45);
    std::set<std::set<Edge>> ours;
    for (const auto& orbit : pair_orbits(g)) {
      ours.insert(std::set<Edge>(orbit.begin(), orbit.end()));
      for (const Edge& e : orbit) {
        EXPECT_EQ(g.adjacent(e.u, e.v), g.adjacent(orbit[0].u, orbit[0].v));
      }
    }
    ASSERT_EQ(ours, oracle::brute_pair_orbits(g)) << to_graph6(g);
  }
}

TEST(PairOrbits, OrientedEdgeRepresentatives) {
  // P_4: orbits of ordered edges are {01,32}, {10,23}, {12,21}
  auto reps = oriented_edge_orbit_representatives(path_graph(4));
  EXPECT_EQ(reps.size(), 3u);
  EXPECT_EQ(oriented_edge_orbit_representatives(complete_graph(5)).size(), 1u);
}
