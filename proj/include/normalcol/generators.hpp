#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "normalcol/multigraph.hpp"
#include "normalcol/open_graph.hpp"

namespace normalcol {

// Small named graphs.
CubicView petersen();  // outer 5-cycle, inner pentagram, spokes
CubicView k4();
CubicView theta();  // two vertices, three parallel edges

// Halin description: a tree without degree-2 vertices (internal degrees exactly
// 3) plus the clockwise cyclic order of its leaves.
struct HalinSpec {
  Multigraph tree;
  std::vector<int> leaf_order;
};

// Canonical spec with `leaves` leaves: a star for 3, a caterpillar otherwise.
HalinSpec canonical_halin(int leaves);

// One five-zone copy inside an assembled treelike snark, in template order.
struct TreelikeBlock {
  std::array<int, 11> verts;
  std::array<int, 14> edges;
  int pendant_edge = -1;  // tree edge at this copy's leaf (anchored at n40)
  int join_a = -1;        // b4 of this copy -> b2 of the next copy (n20 - next n3m1)
  int join_b = -1;        // b5 of this copy -> b1 of the next copy (n02 - next n51)
};

struct TreelikeResult {
  CubicView graph;
  std::vector<TreelikeBlock> blocks;  // by copy index = position in leaf_order
  std::vector<int> tree_vertex_map;   // tree vertex -> graph vertex (leaf -> its n40)
  std::vector<int> tree_edge_map;     // tree edge -> graph edge
};

// G(T,C): one five-zone per leaf in cyclic order, leaf identified with the b3
// end, b4 joined to the next copy's b2 and b5 to the next copy's b1.
TreelikeResult treelike_snark(const HalinSpec& spec);

// Cycle permutation description: outer cycle u_0..u_{n-1}, inner cycle
// v_0..v_{n-1}, matching v_i - u_{p[i]}, normalized so p[0] = 0.
struct CyclePermSpec {
  int n = 0;
  std::vector<int> p;
};

struct CyclePermResult {
  CubicView graph;
  int n = 0;
  // Edge ids: outer i = i (u_i - u_{i+1}), inner i = n + i (v_i - v_{i+1}),
  // matching i = 2n + i (v_i - u_{p[i]}). Vertices: u_i = i, v_i = n + i.
  std::vector<int> p;
};

CyclePermResult cycle_permutation(const CyclePermSpec& spec);

// Triangle expansion with its construction maps. Original edge e of h keeps id
// e; vertex v becomes corners 3v, 3v+1, 3v+2 (corner rank = position of the
// edge in v's incidence list); triangle edges of v are m + 3v + {0,1,2} in the
// order (3v,3v+1), (3v,3v+2), (3v+1,3v+2).
struct TriangleExpansion {
  CubicView graph;
  std::vector<std::array<int, 3>> triangle_of_vertex;
  std::vector<std::array<int, 3>> triangle_edges;
  std::vector<int> edge_map;  // h edge -> expansion edge (identity prefix)
};

TriangleExpansion triangle_expand(const CubicView& h);
int expansion_corner(const CubicView& h, int v, int e);  // corner vertex id for (v, e)

// Replace edge e = uv with a string of k >= 1 diamonds: remaining edges keep
// their relative order (ids compacted), then per diamond the five internal
// edges, then the k+1 splice edges from u through the string to v.
Multigraph replace_edge_with_diamond_string(const Multigraph& g, int e, int k);

// k >= 2 diamonds joined cyclically pole-to-pole.
CubicView ring_of_diamonds(int k);

// Pairing-model random cubic multigraph, resampled until connected and
// bridgeless; deterministic per (n, seed).
CubicView random_bridgeless_cubic(int n, std::uint64_t seed);

}  // namespace normalcol
