#include <set>
#include <stdexcept>

#include "corpus.hpp"
#include "doctest.h"
#include "normalcol/exact.hpp"
#include "normalcol/generators.hpp"
#include "oracles.hpp"

using namespace normalcol;

TEST_CASE("small graphs admit normal 3-colorings") {
  for (const Multigraph& g : {k4().graph(), theta().graph(), corpus::prism(),
                              corpus::cube(), corpus::k33()}) {
    SolveResult res = exists_normal_k(CubicView(g), 3);
    REQUIRE(res.status == SolveStatus::Found);
    REQUIRE(res.coloring.has_value());
    NormalityReport rep = report(g, *res.coloring);
    CHECK(rep.proper);
    CHECK(rep.is_normal());
    CHECK(rep.poor == g.edge_count());  // 3 colors force every edge poor
  }
}

TEST_CASE("petersen needs exactly five colors") {
  CubicView p = petersen();
  SolveResult four = exists_normal_k(p, 4);
  CHECK(four.status == SolveStatus::None);
  SolveResult five = exists_normal_k(p, 5);
  REQUIRE(five.status == SolveStatus::Found);
  REQUIRE(five.coloring.has_value());
  NormalityReport rep = report(p.graph(), *five.coloring);
  CHECK(rep.proper);
  CHECK(rep.is_normal());
  std::set<int> used(five.coloring->assignment.begin(), five.coloring->assignment.end());
  CHECK(used.size() <= 5);

  MinColorsResult mc = min_normal_colors(p, 7);
  CHECK(mc.status == SolveStatus::Found);
  CHECK(mc.k == 5);
  REQUIRE(mc.witness.has_value());
  CHECK(report(p.graph(), *mc.witness).is_normal());
}

TEST_CASE("three-edge-colorability") {
  CHECK(is_3_edge_colorable(k4()));
  CHECK(is_3_edge_colorable(theta()));
  CHECK(is_3_edge_colorable(CubicView(corpus::prism())));
  CHECK(is_3_edge_colorable(CubicView(corpus::cube())));
  CHECK(is_3_edge_colorable(CubicView(corpus::k33())));
  CHECK_FALSE(is_3_edge_colorable(petersen()));
  // The permutation i -> 2i mod 5 builds a graph isomorphic to the Petersen
  // graph: ten vertices, girth five, and no proper 3-edge-coloring.
  CyclePermResult r = cycle_permutation({5, {0, 2, 4, 1, 3}});
  CHECK(r.graph.graph().vertex_count() == 10);
  CHECK(oracle::girth(r.graph.graph()) == 5);
  CHECK_FALSE(is_3_edge_colorable(r.graph));
}

TEST_CASE("budgets produce indeterminate results") {
  SolveBudget tiny;
  tiny.max_nodes = 5;
  SolveResult res = exists_normal_k(petersen(), 4, tiny);
  CHECK(res.status == SolveStatus::Indeterminate);
  CHECK(res.nodes <= 5 + 1);
  MinColorsResult mc = min_normal_colors(petersen(), 7, tiny);
  CHECK(mc.status == SolveStatus::Indeterminate);
}

TEST_CASE("out-of-range color counts") {
  // Fewer than three colors can never properly color a cubic graph.
  CHECK(exists_normal_k(petersen(), 2).status == SolveStatus::None);
  CHECK_THROWS_AS(exists_normal_k(petersen(), 32), std::invalid_argument);
  CHECK_THROWS_AS(max_normal_edges(petersen(), 32), std::invalid_argument);
}

TEST_CASE("maximum normal edges under four colors on the petersen graph") {
  MaxNormalResult res = max_normal_edges(petersen(), 4);
  REQUIRE(res.status == SolveStatus::Found);
  REQUIRE(res.coloring.has_value());
  NormalityReport rep = report(petersen().graph(), *res.coloring);
  CHECK(rep.proper);
  CHECK(rep.poor + rep.rich == res.count);
  // Can't be all 15, since no normal 4-coloring exists; the brute-force
  // optimum pins the exact value.
  CHECK(res.count < 15);
  CHECK(res.count == oracle::max_normal_brute(petersen().graph(), 4));

  // On a 3-edge-colorable graph the optimum with 3 colors is everything.
  MaxNormalResult pr = max_normal_edges(CubicView(corpus::prism()), 3);
  REQUIRE(pr.status == SolveStatus::Found);
  CHECK(pr.count == 9);
}
