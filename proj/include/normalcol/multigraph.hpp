#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace normalcol {

// Undirected edge; endpoints are stored as added (no normalization).
struct Edge {
  int u = -1;
  int v = -1;
  int other(int w) const {
    if (w == u) return v;
    if (w == v) return u;
    throw std::invalid_argument("Edge::other: vertex not an endpoint");
  }
  bool has_endpoint(int w) const { return w == u || w == v; }
};

// Immutable-after-construction multigraph: parallel edges allowed, loops rejected.
// Vertices are 0..n-1, edge indices 0..m-1 in insertion order.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) { for (int i = 0; i < n; ++i) add_vertex(); }

  int add_vertex() {
    inc_.emplace_back();
    return static_cast<int>(inc_.size()) - 1;
  }

  int add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: loops are forbidden");
    int e = static_cast<int>(edges_.size());
    edges_.push_back({u, v});
    inc_[u].push_back(e);
    inc_[v].push_back(e);
    return e;
  }

  int vertex_count() const { return static_cast<int>(inc_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int e) const {
    if (e < 0 || e >= edge_count()) throw std::invalid_argument("edge: index out of range");
    return edges_[e];
  }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& incident(int v) const {
    check_vertex(v, "incident");
    return inc_[v];
  }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  int multiplicity(int u, int v) const {
    check_vertex(u, "multiplicity");
    check_vertex(v, "multiplicity");
    int c = 0;
    for (int e : inc_[u])
      if (edges_[e].other(u) == v) ++c;
    return c;
  }
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

  // Sorted distinct neighbor list (underlying simple graph).
  std::vector<int> neighbors(int v) const;

  bool is_simple() const;
  bool is_connected() const;
  bool is_regular(int d) const;

 private:
  void check_vertex(int v, const char* who) const {
    if (v < 0 || v >= vertex_count())
      throw std::invalid_argument(std::string(who) + ": vertex out of range");
  }
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> inc_;
};

// Spec'd free-function form of incidence lookup.
inline std::vector<int> incident_edges(const Multigraph& g, int v) { return g.incident(v); }

// Validated wrapper: every vertex has degree exactly 3.
class CubicView {
 public:
  explicit CubicView(Multigraph g) : g_(std::move(g)) {
    if (!g_.is_regular(3)) throw std::invalid_argument("CubicView: graph is not cubic");
  }
  const Multigraph& graph() const { return g_; }
  int vertex_count() const { return g_.vertex_count(); }
  int edge_count() const { return g_.edge_count(); }

 private:
  Multigraph g_;
};

// Validated wrapper: every vertex has degree exactly 4.
class FourRegularView {
 public:
  explicit FourRegularView(Multigraph g) : g_(std::move(g)) {
    if (!g_.is_regular(4)) throw std::invalid_argument("FourRegularView: graph is not 4-regular");
  }
  const Multigraph& graph() const { return g_; }

 private:
  Multigraph g_;
};

struct ContractionResult {
  Multigraph graph;
  std::vector<int> vertex_map;   // old vertex -> new vertex
  std::vector<int> edge_map;     // old edge -> new edge, -1 if dropped (intra-part)
  std::vector<int> edge_origin;  // new edge -> old edge
};

// Contract each part to a single vertex. Parts must be disjoint, each inducing a
// connected subgraph; a part holding a parallel pair is rejected (it marks a
// contraction that only makes sense as a loop, which we forbid). Unlisted
// vertices survive unchanged; simple intra-part edges are dropped; edges between
// parts keep their multiplicity and relative order.
ContractionResult contract(const Multigraph& g, const std::vector<std::vector<int>>& parts);

}  // namespace normalcol
