#pragma once
#include <string>
#include <vector>

#include "normalcol/multigraph.hpp"

namespace normalcol {

struct Stub {
  std::string label;
  int anchor = -1;
};

// Multigraph under construction with labeled dangling half-edges; every vertex
// keeps degree + stub count at most 3 so closing can yield a cubic graph.
class OpenGraph {
 public:
  int add_vertex() { return g_.add_vertex(); }
  int add_edge(int u, int v);
  void add_stub(const std::string& label, int anchor);
  void remove_stub(const std::string& label);
  int stub_anchor(const std::string& label) const;
  // Connect two stubs into an edge, consuming both; returns the edge id.
  int join_stubs(const std::string& a, const std::string& b);
  const std::vector<Stub>& stubs() const { return stubs_; }
  const Multigraph& peek() const { return g_; }
  int vertex_count() const { return g_.vertex_count(); }
  int edge_count() const { return g_.edge_count(); }

  // Disjoint union: append `other`, its stubs relabeled with `suffix`; returns
  // the vertex id offset.
  int absorb(const OpenGraph& other, const std::string& suffix);

  // Succeeds only when no stubs remain and every vertex has degree 3.
  CubicView close() const;

 private:
  int slots(int v) const;
  Multigraph g_;
  std::vector<Stub> stubs_;
};

// The 11-vertex, 14-edge five-zone block with stubs b1..b5. Vertex order:
// n00, n10, n20, n01, n21, n02, n12, n22, n3m1, n40, n51.
OpenGraph five_zone();

// Template indices into the five-zone block, used by the treelike colorer.
namespace five_zone_ix {
// vertices
inline constexpr int n00 = 0, n10 = 1, n20 = 2, n01 = 3, n21 = 4, n02 = 5, n12 = 6,
                     n22 = 7, n3m1 = 8, n40 = 9, n51 = 10;
// edges
inline constexpr int bot_l = 0;     // n00-n10
inline constexpr int left_lo = 1;   // n00-n01
inline constexpr int link_a = 2;    // n00-n3m1
inline constexpr int bot_r = 3;     // n10-n20
inline constexpr int mid_v = 4;     // n10-n12
inline constexpr int mid_h = 5;     // n01-n21
inline constexpr int left_up = 6;   // n01-n02
inline constexpr int top_l = 7;     // n02-n12
inline constexpr int top_r = 8;     // n12-n22
inline constexpr int right_lo = 9;  // n20-n21
inline constexpr int right_up = 10; // n21-n22
inline constexpr int link_b = 11;   // n22-n51
inline constexpr int path_lo = 12;  // n40-n3m1
inline constexpr int path_up = 13;  // n40-n51
}  // namespace five_zone_ix

}  // namespace normalcol
