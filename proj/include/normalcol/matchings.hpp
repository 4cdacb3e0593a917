#pragma once
#include <functional>
#include <vector>

#include "normalcol/cuts.hpp"
#include "normalcol/multigraph.hpp"

namespace normalcol {

struct Matching {
  std::vector<int> edges;  // sorted, pairwise non-adjacent
};

struct Cycle {
  // vertices[i] -- vertices[(i+1) % L] is edges[i]; traversal starts at the
  // cycle's smallest vertex, leaving along its lowest-index cycle edge.
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct TwoFactor {
  std::vector<Cycle> cycles;  // ordered by smallest vertex
};

bool is_matching(const Multigraph& g, const Matching& m);
bool is_perfect_matching(const Multigraph& g, const Matching& m);

// Enumerate perfect matchings by backtracking on the lowest-index uncovered
// vertex; `visit` returns false to stop early. Requires even vertex count.
void for_each_perfect_matching(const CubicView& g, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> perfect_matchings(const CubicView& g);

// First perfect matching meeting every minimal 3-edge-cut in exactly one edge.
// Requires a connected bridgeless graph.
Matching matching_meeting_3cuts(const CubicView& g);

// Decompose the complement of a perfect matching into cycles.
TwoFactor complementary_two_factor(const CubicView& g, const Matching& m);

}  // namespace normalcol
