#include <algorithm>
#include <set>
#include <stdexcept>

#include "corpus.hpp"
#include "doctest.h"
#include "normalcol/cuts.hpp"
#include "normalcol/generators.hpp"
#include "normalcol/matchings.hpp"
#include "normalcol/structure.hpp"
#include "oracles.hpp"

using namespace normalcol;

TEST_CASE("multigraph basics") {
  Multigraph g(3);
  CHECK(g.vertex_count() == 3);
  int e0 = g.add_edge(0, 1);
  int e1 = g.add_edge(0, 1);
  int e2 = g.add_edge(1, 2);
  CHECK(e0 == 0);
  CHECK(e1 == 1);
  CHECK(e2 == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.multiplicity(1, 0) == 2);
  CHECK(g.multiplicity(0, 2) == 0);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(2) == 1);
  CHECK_FALSE(g.is_simple());
  CHECK(g.is_connected());
  CHECK_FALSE(g.is_regular(3));
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge(0).other(0) == 1);
  CHECK(g.edge(0).has_endpoint(1));
  CHECK_FALSE(g.edge(0).has_endpoint(2));
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
  int v = g.add_vertex();
  CHECK(v == 3);
  CHECK(g.vertex_count() == 4);
}

TEST_CASE("cubic view validates") {
  CHECK_NOTHROW(petersen());
  CHECK_NOTHROW(theta());
  Multigraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_THROWS_AS(CubicView{path}, std::invalid_argument);
}

TEST_CASE("contraction of the prism's triangles gives a theta") {
  Multigraph g = corpus::prism();
  ContractionResult cr = contract(g, {{0, 1, 2}, {3, 4, 5}});
  CHECK(cr.graph.vertex_count() == 2);
  CHECK(cr.graph.edge_count() == 3);
  CHECK(cr.graph.multiplicity(0, 1) == 3);
  CHECK(cr.vertex_map == std::vector<int>{0, 0, 0, 1, 1, 1});
  // Intra-triangle edges are dropped; the three rungs survive in index order.
  CHECK(cr.edge_map[0] == -1);
  CHECK(cr.edge_map[6] == 0);
  CHECK(cr.edge_map[7] == 1);
  CHECK(cr.edge_map[8] == 2);
  CHECK(cr.edge_origin == std::vector<int>{6, 7, 8});
}

TEST_CASE("bridges and bridgelessness match the oracle") {
  // A bridged graph: two triangles joined by one edge.
  Multigraph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  int bridge = g.add_edge(2, 3);
  CHECK(bridges(g) == std::vector<int>{bridge});
  CHECK(bridges(g) == oracle::bridges(g));
  CHECK_FALSE(is_bridgeless(g));
  CHECK(is_bridgeless(petersen().graph()));
  CHECK(is_bridgeless(theta().graph()));
  // A parallel pair never contains a bridge.
  Multigraph d = corpus::domino();
  CHECK(oracle::bridges(d).empty());
  CHECK(is_bridgeless(d));
}

TEST_CASE("small cuts match the oracle") {
  auto check_graph = [](const Multigraph& g) {
    for (int k = 2; k <= 3; ++k) {
      std::vector<std::vector<int>> expected;
      for (const auto& cut : oracle::small_cuts(g, k))
        if (static_cast<int>(cut.size()) == k) expected.push_back(cut);
      std::vector<EdgeCut> got = enumerate_small_cuts(g, k);
      REQUIRE(got.size() == expected.size());
      for (size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].edges == expected[i]);
        // The reported side contains vertex 0.
        CHECK(std::find(got[i].side.begin(), got[i].side.end(), 0) != got[i].side.end());
      }
    }
  };
  check_graph(corpus::prism());
  check_graph(corpus::domino());
  check_graph(random_bridgeless_cubic(10, 7).graph());
  check_graph(corpus::two_cut_join(corpus::prism(), 6, corpus::prism(), 6));
}

TEST_CASE("cycle C6: every pair of edges is a 2-cut") {
  Multigraph c6(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  CHECK(enumerate_small_cuts(c6, 2).size() == 15);
}

TEST_CASE("petersen has no 2-cuts and exactly the ten vertex-star 3-cuts") {
  Multigraph p = petersen().graph();
  CHECK(enumerate_small_cuts(p, 2).empty());
  std::vector<EdgeCut> cuts = enumerate_small_cuts(p, 3);
  REQUIRE(cuts.size() == 10);
  std::set<std::vector<int>> stars;
  for (int v = 0; v < 10; ++v) {
    std::vector<int> s = p.incident(v);
    std::sort(s.begin(), s.end());
    stars.insert(s);
  }
  for (const EdgeCut& c : cuts) CHECK(stars.count(c.edges) == 1);
}

TEST_CASE("perfect matchings: theta, k4, petersen") {
  CHECK(perfect_matchings(theta()).size() == 3);
  CHECK(perfect_matchings(k4()).size() == 3);
  CubicView p = petersen();
  std::vector<Matching> pm = perfect_matchings(p);
  std::vector<std::vector<int>> brute = oracle::perfect_matchings(p.graph());
  REQUIRE(pm.size() == 6);
  REQUIRE(brute.size() == 6);
  // Same set of matchings, independent of enumeration order.
  std::vector<std::vector<int>> got;
  for (const Matching& m : pm) {
    std::vector<int> edges = m.edges;
    std::sort(edges.begin(), edges.end());
    got.push_back(edges);
  }
  std::sort(got.begin(), got.end());
  CHECK(got == brute);
  // Each complement is a pair of 5-cycles.
  for (const Matching& m : pm) {
    CHECK(is_perfect_matching(p.graph(), m));
    TwoFactor tf = complementary_two_factor(p, m);
    REQUIRE(tf.cycles.size() == 2);
    CHECK(tf.cycles[0].vertices.size() == 5);
    CHECK(tf.cycles[1].vertices.size() == 5);
  }
}

TEST_CASE("two factor cycles traverse correctly") {
  Multigraph p = corpus::prism();
  // Rungs form a perfect matching; the complement is the two triangles.
  Matching m{{6, 7, 8}};
  REQUIRE(is_perfect_matching(p, m));
  TwoFactor tf = complementary_two_factor(CubicView(p), m);
  REQUIRE(tf.cycles.size() == 2);
  for (const Cycle& c : tf.cycles) {
    REQUIRE(c.vertices.size() == 3);
    REQUIRE(c.edges.size() == 3);
    CHECK(c.vertices[0] == *std::min_element(c.vertices.begin(), c.vertices.end()));
    for (size_t i = 0; i < c.vertices.size(); ++i) {
      const Edge& e = p.edge(c.edges[i]);
      int a = c.vertices[i], b = c.vertices[(i + 1) % c.vertices.size()];
      CHECK(((e.u == a && e.v == b) || (e.u == b && e.v == a)));
    }
  }
}

TEST_CASE("matching meeting all 3-cuts") {
  auto verify = [](const CubicView& g) {
    Matching m = matching_meeting_3cuts(g);
    REQUIRE(is_perfect_matching(g.graph(), m));
    std::set<int> in_m(m.edges.begin(), m.edges.end());
    for (const EdgeCut& cut : enumerate_small_cuts(g.graph(), 3)) {
      int meet = 0;
      for (int e : cut.edges) meet += in_m.count(e);
      CHECK(meet == 1);
    }
  };
  verify(CubicView(corpus::prism()));  // vertex stars plus the middle rung cut
  verify(petersen());
  verify(k4());
  verify(triangle_expand(petersen()).graph);
}

TEST_CASE("claw detection matches the oracle") {
  for (const Multigraph& g :
       {petersen().graph(), k4().graph(), theta().graph(), corpus::prism(),
        corpus::cube(), corpus::k33(), corpus::domino(),
        random_bridgeless_cubic(12, 3).graph()}) {
    CHECK(is_claw_free(g) == !oracle::has_claw(g));
  }
  CHECK(is_claw_free(k4().graph()));
  CHECK(is_claw_free(corpus::prism()));
  CHECK(is_claw_free(corpus::domino()));
  CHECK_FALSE(is_claw_free(petersen().graph()));
  CHECK_FALSE(is_claw_free(corpus::k33()));
  CHECK_FALSE(is_claw_free(corpus::cube()));
}

TEST_CASE("triangles and diamonds") {
  TrianglesAndDiamonds prism_td = find_triangles_and_diamonds(corpus::prism());
  CHECK(prism_td.triangles.size() == 2);
  CHECK(prism_td.diamonds.empty());

  // K4 has four triangles but no induced diamond (nothing is non-adjacent).
  TrianglesAndDiamonds k4_td = find_triangles_and_diamonds(k4().graph());
  CHECK(k4_td.triangles.size() == 4);
  CHECK(k4_td.diamonds.empty());

  Multigraph ring = ring_of_diamonds(3).graph();
  TrianglesAndDiamonds ring_td = find_triangles_and_diamonds(ring);
  CHECK(ring_td.triangles.size() == 6);
  REQUIRE(ring_td.diamonds.size() == 3);
  for (const Diamond& d : ring_td.diamonds) {
    CHECK(d.pole_u < d.pole_v);
    CHECK(d.center_x < d.center_y);
    CHECK_FALSE(ring.adjacent(d.pole_u, d.pole_v));
    CHECK(ring.adjacent(d.center_x, d.center_y));
  }
}
