#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "corpus.hpp"
#include "doctest.h"
#include "normalcol/colorers.hpp"
#include "normalcol/cuts.hpp"
#include "normalcol/exact.hpp"
#include "normalcol/generators.hpp"
#include "normalcol/matchings.hpp"
#include "normalcol/structure.hpp"
#include "oracles.hpp"

using namespace normalcol;

namespace {

// Re-check a certificate against the oracle classification.
void audit(const Multigraph& g, const Certificate& cert, int max_colors,
           bool expect_normal = true) {
  REQUIRE(static_cast<int>(cert.coloring.assignment.size()) == g.edge_count());
  CHECK(oracle::proper(g, cert.coloring.assignment));
  CHECK(cert.report.proper);
  if (expect_normal) {
    CHECK(cert.report.is_normal());
    for (int e = 0; e < g.edge_count(); ++e)
      CHECK(oracle::classify(g, cert.coloring.assignment, e) != EdgeClass::Neither);
  }
  CHECK(colors_used(cert.coloring) <= max_colors);
  for (int c : cert.coloring.assignment) {
    CHECK(c >= 1);
    CHECK(c <= cert.coloring.k);
  }
}

Matching first_pm(const CubicView& g) {
  Matching f;
  for_each_perfect_matching(g, [&](const Matching& m) {
    f = m;
    return false;
  });
  return f;
}

}  // namespace

TEST_CASE("block templates self-check") { CHECK_NOTHROW(self_check_block_templates()); }

TEST_CASE("triangle expansion coloring") {
  std::vector<Multigraph> bases = {theta().graph(),
                                   k4().graph(),
                                   corpus::prism(),
                                   corpus::cube(),
                                   corpus::k33(),
                                   corpus::wagner(),
                                   corpus::domino(),
                                   petersen().graph(),
                                   random_bridgeless_cubic(8, 21).graph(),
                                   random_bridgeless_cubic(10, 22).graph()};
  for (const Multigraph& h : bases) {
    CubicView view(h);
    Matching f = first_pm(view);
    Certificate cert = color_triangle_expansion(view, f);
    TriangleExpansion tx = triangle_expand(view);
    audit(tx.graph.graph(), cert, 6);
    CHECK(cert.method == "triangle-expansion");
    // Matching edges keep color 1.
    for (int e : f.edges) CHECK(cert.coloring.assignment[tx.edge_map[e]] == 1);
  }
  // A non-perfect matching is rejected.
  CHECK_THROWS_AS(color_triangle_expansion(petersen(), Matching{{0}}),
                  std::invalid_argument);
}

TEST_CASE("claw-free coloring handles every reduction") {
  // Triangle partitions (via expansions), including one with parallel base edges.
  for (const Multigraph& h :
       {theta().graph(), k4().graph(), corpus::prism(), petersen().graph(),
        corpus::domino(), random_bridgeless_cubic(10, 33).graph()}) {
    Multigraph g = triangle_expand(CubicView(h)).graph.graph();
    Certificate cert = color_claw_free(CubicView(g));
    audit(g, cert, 6);
    CHECK(cert.method == "claw-free");
  }

  // K4 terminates the recursion with three colors.
  Certificate k4cert = color_claw_free(k4());
  audit(k4().graph(), k4cert, 3);

  // Theta: three parallel edges.
  Certificate thcert = color_claw_free(theta());
  audit(theta().graph(), thcert, 3);

  // Parallel-pair reductions: the domino and digon insertions.
  Certificate dcert = color_claw_free(CubicView(corpus::domino()));
  audit(corpus::domino(), dcert, 6);
  Multigraph pr_digon = corpus::insert_digon(corpus::prism(), 6);
  REQUIRE(is_claw_free(pr_digon));
  Certificate dg = color_claw_free(CubicView(pr_digon));
  audit(pr_digon, dg, 6);

  // Rings of diamonds finish in the explicit all-poor base case.
  for (int k = 2; k <= 4; ++k) {
    Certificate ring = color_claw_free(ring_of_diamonds(k));
    audit(ring_of_diamonds(k).graph(), ring, 3);
    CHECK(ring.report.poor == 6 * k);
  }

  // Diamond strings force diamond reductions.
  Multigraph expanded = triangle_expand(CubicView(corpus::prism())).graph.graph();
  for (int k = 1; k <= 3; ++k) {
    Multigraph g = replace_edge_with_diamond_string(expanded, 3, k);
    REQUIRE(is_claw_free(g));
    REQUIRE(is_bridgeless(g));
    Certificate cert = color_claw_free(CubicView(g));
    audit(g, cert, 6);
  }

  // Preconditions.
  CHECK_THROWS_AS(color_claw_free(petersen()), std::invalid_argument);  // has claws
  CHECK_THROWS_AS(color_claw_free(CubicView(corpus::k33())), std::invalid_argument);
}

TEST_CASE("independent chord pairs") {
  // The Petersen permutation (i -> 2i mod 5) leaves no independent pair.
  CHECK_FALSE(find_independent_chord_pair({5, {0, 2, 4, 1, 3}}).has_value());
  auto pr = find_independent_chord_pair({7, {0, 2, 4, 6, 1, 3, 5}});
  REQUIRE(pr.has_value());
  auto [i, j] = *pr;
  int n = 7;
  std::vector<int> p = {0, 2, 4, 6, 1, 3, 5};
  int d = ((j - i) % n + n) % n, dp = ((p[j] - p[i]) % n + n) % n;
  CHECK(d != 1);
  CHECK(d != n - 1);
  CHECK(dp != 1);
  CHECK(dp != n - 1);
}

TEST_CASE("cycle permutation coloring: even lengths are all-poor 3-colorings") {
  std::mt19937_64 rng(7);
  for (int n : {6, 8, 10}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      std::shuffle(p.begin() + 1, p.end(), rng);
      int at0 = 0;
      for (int i = 0; i < n; ++i)
        if (p[i] == 0) at0 = i;
      std::swap(p[0], p[at0]);  // normalize p[0] = 0
      CyclePermSpec spec{n, p};
      Multigraph g = cycle_permutation(spec).graph.graph();
      Certificate cert = color_cycle_permutation(spec);
      audit(g, cert, 3);
      CHECK(cert.report.poor == g.edge_count());
      CHECK(cert.method == "cycle-perm");
    }
  }
}

TEST_CASE("cycle permutation coloring: odd lengths avoid one class entirely") {
  std::mt19937_64 rng(8);
  for (int n : {7, 9, 11}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> p(n);
      for (int i = 0; i < n; ++i) p[i] = i;
      std::shuffle(p.begin() + 1, p.end(), rng);
      int at0 = 0;
      for (int i = 0; i < n; ++i)
        if (p[i] == 0) at0 = i;
      std::swap(p[0], p[at0]);
      CyclePermSpec spec{n, p};
      Multigraph g = cycle_permutation(spec).graph.graph();
      Certificate cert = color_cycle_permutation(spec);
      audit(g, cert, 6);
      for (int c : cert.coloring.assignment) CHECK(c != 2);  // class 010 is empty
      CHECK(cert.method == "cycle-perm");
    }
  }
}

TEST_CASE("cycle permutation coloring: petersen permutation takes the exact fallback") {
  CyclePermSpec spec{5, {0, 2, 4, 1, 3}};
  Certificate cert = color_cycle_permutation(spec);
  Multigraph g = cycle_permutation(spec).graph.graph();
  audit(g, cert, 5);
  CHECK(cert.method == "cycle-perm/exact-fallback");
  CHECK(colors_used(cert.coloring) == 5);  // it is the Petersen graph
}

TEST_CASE("treelike snark coloring") {
  for (int leaves = 3; leaves <= 6; ++leaves) {
    HalinSpec spec = canonical_halin(leaves);
    TreelikeResult r = treelike_snark(spec);
    Certificate cert = color_treelike(spec);
    audit(r.graph.graph(), cert, 6);
    CHECK(cert.method == "treelike");
  }
  // A custom tree: two internal vertices, four leaves (the H shape).
  HalinSpec custom;
  custom.tree = Multigraph(6);
  custom.tree.add_edge(0, 1);  // internal spine
  custom.tree.add_edge(0, 2);
  custom.tree.add_edge(0, 3);
  custom.tree.add_edge(1, 4);
  custom.tree.add_edge(1, 5);
  custom.leaf_order = {2, 3, 4, 5};
  Certificate cert = color_treelike(custom);
  audit(treelike_snark(custom).graph.graph(), cert, 6);

  HalinSpec bad;
  bad.tree = Multigraph(3);
  bad.tree.add_edge(0, 1);
  bad.tree.add_edge(1, 2);
  bad.leaf_order = {0, 2};
  CHECK_THROWS_AS(color_treelike(bad), std::invalid_argument);
}

TEST_CASE("the 7/9 bound certificate") {
  std::vector<Multigraph> graphs = {theta().graph(),
                                    k4().graph(),
                                    corpus::prism(),
                                    corpus::cube(),
                                    corpus::k33(),
                                    corpus::wagner(),
                                    corpus::domino(),
                                    petersen().graph(),
                                    treelike_snark(canonical_halin(3)).graph.graph(),
                                    corpus::two_cut_join(corpus::prism(), 6,
                                                         corpus::prism(), 6),
                                    corpus::two_cut_join(petersen().graph(), 0,
                                                         corpus::prism(), 0),
                                    random_bridgeless_cubic(14, 9).graph()};
  for (const Multigraph& g : graphs) {
    Certificate cert = color_bound_79(CubicView(g));
    audit(g, cert, 6, /*expect_normal=*/false);
    CHECK(cert.method == "bound79");
    int m = g.edge_count();
    CHECK(9 * (cert.report.poor + cert.report.rich) >= 7 * m);
    CHECK(cert.report.normal_fraction >= Rational(7, 9));
  }
  // Bridges are rejected up front. The smallest cubic bridged graph: two
  // doubled-edge triangles joined by one edge; it also happens to be claw-free.
  Multigraph bridged(6);
  bridged.add_edge(0, 1);
  bridged.add_edge(0, 1);
  bridged.add_edge(0, 2);
  bridged.add_edge(1, 2);
  bridged.add_edge(2, 3);  // the bridge
  bridged.add_edge(3, 4);
  bridged.add_edge(3, 5);
  bridged.add_edge(4, 5);
  bridged.add_edge(4, 5);
  REQUIRE(bridged.is_regular(3));
  REQUIRE_FALSE(is_bridgeless(bridged));
  REQUIRE(is_claw_free(bridged));
  CHECK_THROWS_AS(color_bound_79(CubicView(bridged)), std::invalid_argument);
  CHECK_THROWS_AS(color_claw_free(CubicView(bridged)), std::invalid_argument);
}
