#pragma once
// Named small cubic graphs and gadget insertions shared across the test suite.
#include <stdexcept>

#include "normalcol/multigraph.hpp"

namespace corpus {

using normalcol::Multigraph;

inline Multigraph prism() {
  Multigraph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

inline Multigraph cube() {
  Multigraph g(8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
  for (int i = 0; i < 4; ++i) g.add_edge(4 + i, 4 + (i + 1) % 4);
  for (int i = 0; i < 4; ++i) g.add_edge(i, 4 + i);
  return g;
}

inline Multigraph k33() {
  Multigraph g(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) g.add_edge(a, b);
  return g;
}

// The Wagner graph (Moebius ladder on eight vertices).
inline Multigraph wagner() {
  Multigraph g(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

// Two digons joined by two single edges; cubic with parallel pairs.
inline Multigraph domino() {
  Multigraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(2, 3);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  return g;
}

// Delete one edge from each graph and reconnect the loose ends crosswise;
// preserves cubicity and 2-edge-connectivity and manufactures a 2-cut.
inline Multigraph two_cut_join(const Multigraph& g1, int e1, const Multigraph& g2,
                               int e2) {
  Multigraph g(g1.vertex_count() + g2.vertex_count());
  int off = g1.vertex_count();
  for (int e = 0; e < g1.edge_count(); ++e)
    if (e != e1) g.add_edge(g1.edge(e).u, g1.edge(e).v);
  for (int e = 0; e < g2.edge_count(); ++e)
    if (e != e2) g.add_edge(off + g2.edge(e).u, off + g2.edge(e).v);
  g.add_edge(g1.edge(e1).u, off + g2.edge(e2).u);
  g.add_edge(g1.edge(e1).v, off + g2.edge(e2).v);
  return g;
}

// Replace edge e = uv by u-a, a=b (doubled), b-v: the smallest gadget that
// introduces a parallel pair while keeping the graph cubic and claw-free.
inline Multigraph insert_digon(const Multigraph& g0, int e0) {
  Multigraph g(g0.vertex_count());
  for (int e = 0; e < g0.edge_count(); ++e)
    if (e != e0) g.add_edge(g0.edge(e).u, g0.edge(e).v);
  int a = g.add_vertex(), b = g.add_vertex();
  g.add_edge(g0.edge(e0).u, a);
  g.add_edge(a, b);
  g.add_edge(a, b);
  g.add_edge(b, g0.edge(e0).v);
  return g;
}

}  // namespace corpus
