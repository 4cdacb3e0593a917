#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normalcol/coloring.hpp"
#include "normalcol/generators.hpp"
#include "normalcol/matchings.hpp"
#include "normalcol/multigraph.hpp"

namespace normalcol {

// A coloring together with its recomputed report and the construction trail.
// Each constructor asserts its own guarantee (normality / color budget /
// normal-count bound) before returning; a violation throws logic_error.
struct Certificate {
  EdgeColoring coloring;
  NormalityReport report;
  std::string method;
  std::vector<std::string> trace;
};

// Number of distinct colors actually used.
int colors_used(const EdgeColoring& c);

// Symbolic colors for block templates: a,b,c range over permutations of
// {1,2,3}; alpha,beta,gamma over permutations of {4,5,6}.
enum class Sym : int { a = 0, b = 1, c = 2, alpha = 3, beta = 4, gamma = 5 };

// Zone-edge roles of the 11-vertex building block, in template order.
enum ZoneRole {
  kBotL = 0,
  kBotR,
  kLeftLo,
  kLeftUp,
  kTopL,
  kTopR,
  kRightLo,
  kRightUp,
  kMidV,
  kMidH,
  kZoneRoleCount
};

// One case (A1..C2) of the block coloring, over symbolic colors.  `zone`
// covers the ten internal non-link edges; the two link edges and the two
// joins toward the next block always take color `a`.  `in_*` are the colors
// expected on the previous block's two path edges, `out_*` the ones this
// block writes on its own path edges.  Pendant/dangling entries describe the
// boundary context used by the self-check gadget.
struct BlockTemplate {
  std::string label;
  std::array<Sym, kZoneRoleCount> zone;
  Sym in_up, in_lo;
  Sym out_up, out_lo;
  Sym own_pendant;   // pendant tree-edge color at this block's path center
  Sym left_pendant;  // pendant color at the previous block's path center
  Sym own_dangling;  // H-edge from this block's path toward the next zone
  Sym left_dangling; // H-edge from the previous path toward the zone before
};

const std::array<BlockTemplate, 6>& block_templates();

// Rotated variant: the block drawn upside down (path roles swapped).
BlockTemplate rotated(const BlockTemplate& t);

// Exhaustive transcription check: every case, both orientations, all 36
// instantiations, embedded in a context gadget; asserts local properness and
// Poor/Rich on every fully-surrounded edge.  Throws logic_error on failure.
void self_check_block_templates();

// Normal <=6 coloring of the triangle expansion of h, given a perfect
// matching F of h.  The certificate's coloring lives on triangle_expand(h).
Certificate color_triangle_expansion(const CubicView& h, const Matching& f);

// Normal <=6 coloring of a claw-free bridgeless cubic graph by structural
// reduction (parallel pairs, diamonds, K4 / ring-of-diamonds bases, triangle
// contraction).
Certificate color_claw_free(const CubicView& g);

// Lexicographically first pair (i, j) of matching-edge indices whose outer
// endpoints are non-adjacent and whose inner endpoints are non-adjacent.
std::optional<std::pair<int, int>> find_independent_chord_pair(
    const CyclePermSpec& spec);

// Normal <=6 coloring of the cycle permutation graph C(n,p); even n gets the
// all-Poor 3-coloring, odd n > 5 the flow construction, n <= 5 an exact
// fallback with at most 5 colors.
Certificate color_cycle_permutation(const CyclePermSpec& spec);

// Normal <=6 coloring of the treelike snark G(T,C) built from `spec`.
Certificate color_treelike(const HalinSpec& spec);

// Proper <=6-coloring with at least ceil(7m/9) normal edges on any bridgeless
// cubic graph (2-cut recursion + matching-flow construction).
Certificate color_bound_79(const CubicView& g);

}  // namespace normalcol
