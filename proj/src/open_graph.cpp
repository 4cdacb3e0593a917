#include "normalcol/open_graph.hpp"

#include <algorithm>

namespace normalcol {

int OpenGraph::slots(int v) const {
  int used = g_.degree(v);
  for (const Stub& s : stubs_) used += (s.anchor == v);
  return used;
}

int OpenGraph::add_edge(int u, int v) {
  if (slots(u) >= 3 || slots(v) >= 3)
    throw std::invalid_argument("OpenGraph::add_edge: vertex already has three slots");
  return g_.add_edge(u, v);
}

void OpenGraph::add_stub(const std::string& label, int anchor) {
  if (anchor < 0 || anchor >= g_.vertex_count())
    throw std::invalid_argument("OpenGraph::add_stub: anchor out of range");
  for (const Stub& s : stubs_)
    if (s.label == label) throw std::invalid_argument("OpenGraph::add_stub: duplicate label");
  if (slots(anchor) >= 3)
    throw std::invalid_argument("OpenGraph::add_stub: anchor already has three slots");
  stubs_.push_back({label, anchor});
}

int OpenGraph::stub_anchor(const std::string& label) const {
  for (const Stub& s : stubs_)
    if (s.label == label) return s.anchor;
  throw std::invalid_argument("OpenGraph::stub_anchor: no stub labeled " + label);
}

void OpenGraph::remove_stub(const std::string& label) {
  auto it = std::find_if(stubs_.begin(), stubs_.end(),
                         [&](const Stub& s) { return s.label == label; });
  if (it == stubs_.end())
    throw std::invalid_argument("OpenGraph::remove_stub: no stub labeled " + label);
  stubs_.erase(it);
}

int OpenGraph::join_stubs(const std::string& a, const std::string& b) {
  int u = stub_anchor(a);
  int v = stub_anchor(b);
  remove_stub(a);
  remove_stub(b);
  return g_.add_edge(u, v);  // the freed slots make room
}

int OpenGraph::absorb(const OpenGraph& other, const std::string& suffix) {
  int offset = g_.vertex_count();
  for (int v = 0; v < other.g_.vertex_count(); ++v) g_.add_vertex();
  for (const Edge& e : other.g_.edges()) g_.add_edge(e.u + offset, e.v + offset);
  for (const Stub& s : other.stubs_) stubs_.push_back({s.label + suffix, s.anchor + offset});
  return offset;
}

CubicView OpenGraph::close() const {
  if (!stubs_.empty())
    throw std::invalid_argument("OpenGraph::close: dangling stubs remain (first: " +
                                stubs_.front().label + ")");
  return CubicView(g_);
}

OpenGraph five_zone() {
  OpenGraph og;
  for (int i = 0; i < 11; ++i) og.add_vertex();
  using namespace five_zone_ix;
  og.add_edge(n00, n10);   // bot_l
  og.add_edge(n00, n01);   // left_lo
  og.add_edge(n00, n3m1);  // link_a
  og.add_edge(n10, n20);   // bot_r
  og.add_edge(n10, n12);   // mid_v
  og.add_edge(n01, n21);   // mid_h
  og.add_edge(n01, n02);   // left_up
  og.add_edge(n02, n12);   // top_l
  og.add_edge(n12, n22);   // top_r
  og.add_edge(n20, n21);   // right_lo
  og.add_edge(n21, n22);   // right_up
  og.add_edge(n22, n51);   // link_b
  og.add_edge(n40, n3m1);  // path_lo
  og.add_edge(n40, n51);   // path_up
  og.add_stub("b1", n51);
  og.add_stub("b2", n3m1);
  og.add_stub("b3", n40);
  og.add_stub("b4", n20);
  og.add_stub("b5", n02);
  return og;
}

}  // namespace normalcol
