#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "normalcol/coloring.hpp"
#include "normalcol/matchings.hpp"
#include "normalcol/multigraph.hpp"

namespace normalcol {

// Element of Z_2^k packed into the low k bits; addition is XOR, every element
// is its own inverse, so flows need no orientation.
using GroupElem = std::uint8_t;

struct FlowAssignment {
  int k = 3;                      // group width, 1..3
  std::vector<GroupElem> values;  // values[e] in 1..(2^k - 1)
};

bool is_nz_flow(const Multigraph& g, const FlowAssignment& f);

// Lexicographically least nowhere-zero Z_2^k flow, by backtracking over edge
// values in index order; nullopt only after exhausting the search.
std::optional<FlowAssignment> find_nz_flow(const Multigraph& g, int k);

// Contraction of g by the cycles of the 2-factor complementary to m.
struct CycleContraction {
  TwoFactor two_factor;
  Multigraph contracted;               // vertex i = cycle i of the 2-factor
  std::vector<int> cycle_of_vertex;    // g vertex -> cycle index
  std::vector<int> edge_to_contracted; // g edge -> contracted edge; -1 on 2-factor
                                       // edges; -2 on same-cycle matching edges
                                       // (their loop image is dropped)
  std::vector<int> contracted_origin;  // contracted edge -> g matching edge
};
CycleContraction cycle_contraction(const CubicView& g, const Matching& m);

// Lift theta (a nowhere-zero Z_2^2 flow on cycle_contraction(g, m).contracted)
// to a nowhere-zero Z_2^3 flow on g: matching edges get (0, theta), with
// same-cycle matching edges taking the free value 01; each 2-factor cycle is
// seeded with 100 at its first edge and propagated by XOR with the matching
// value at each crossed vertex.
FlowAssignment extend_matching_flow(const CubicView& g, const Matching& m,
                                    const FlowAssignment& theta);

// Read a Z_2^3 flow as a 7-edge-coloring: 001->1, 010->2, ..., 111->7.
EdgeColoring flow_to_coloring(const Multigraph& g, const FlowAssignment& f);

// When some nonzero value gamma is missing from a Z_2^3 flow, normalize gamma
// to 111 by the lexicographically least invertible GF(2) matrix and read off a
// proper 3-edge-coloring from the pairs {001,110}, {010,101}, {100,011}.
EdgeColoring coloring_from_missing_value_flow(const Multigraph& g, const FlowAssignment& f);

struct NonconflictingWitness {
  FlowAssignment flow;
  GroupElem alpha = 0, beta = 0;
};

// Exhaustive search over all nowhere-zero Z_2^3 flows and ordered pairs of
// distinct nonzero (alpha, beta) such that (1) the alpha/beta edges form a
// matching and (2) no edge has one end touching an alpha edge and the other
// touching a beta edge. Deterministic first hit; sharded across threads by the
// first edge's value when parallel=true (same result either way).
std::optional<NonconflictingWitness> search_nonconflicting_flow(const CubicView& g,
                                                                bool parallel = true);

// Count of nowhere-zero Z_2^3 flows scanned by an exhaustive enumeration.
long long count_nz_flows(const Multigraph& g, int k);

// Recolor the beta class to alpha; on a witness this is a normal coloring
// using at most six of the seven labels.
EdgeColoring merge_to_six(const Multigraph& g, const FlowAssignment& f, GroupElem alpha,
                          GroupElem beta);

// Thread cap honoring the NORMALCOL_THREADS environment variable.
int thread_cap();

}  // namespace normalcol
