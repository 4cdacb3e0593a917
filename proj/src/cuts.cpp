#include "normalcol/cuts.hpp"

#include <algorithm>

namespace normalcol {

std::vector<int> component_labels(const Multigraph& g, const std::vector<char>& mask) {
  int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        if (!mask.empty() && mask[e]) continue;
        int w = g.edge(e).other(v);
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Multigraph& g, const std::vector<char>& mask) {
  auto label = component_labels(g, mask);
  return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
}

std::vector<int> bridges(const Multigraph& g) {
  std::vector<int> out;
  int base = component_count(g, {});
  std::vector<char> mask(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.multiplicity(ed.u, ed.v) > 1) continue;
    mask[e] = 1;
    if (component_count(g, mask) > base) out.push_back(e);
    mask[e] = 0;
  }
  return out;
}

bool is_bridgeless(const Multigraph& g) { return bridges(g).empty(); }

namespace {

// Minimality check given the labels after removing `cut`: exactly two
// components and every removed edge joins them.
bool is_minimal_two_sided(const Multigraph& g, const std::vector<int>& cut,
                          const std::vector<int>& label, EdgeCut* out) {
  int comps = label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
  if (comps != 2) return false;
  for (int e : cut)
    if (label[g.edge(e).u] == label[g.edge(e).v]) return false;
  if (out) {
    out->edges = cut;
    int keep = label[0];
    for (int v = 0; v < g.vertex_count(); ++v)
      if (label[v] == keep) out->side.push_back(v);
  }
  return true;
}

}  // namespace

std::vector<EdgeCut> enumerate_small_cuts(const Multigraph& g, int k) {
  if (k != 2 && k != 3) throw std::invalid_argument("enumerate_small_cuts: k must be 2 or 3");
  if (!g.is_connected()) throw std::invalid_argument("enumerate_small_cuts: graph must be connected");
  int m = g.edge_count();
  std::vector<EdgeCut> out;
  std::vector<char> mask(m, 0);
  auto test = [&](const std::vector<int>& cut) {
    for (int e : cut) mask[e] = 1;
    auto label = component_labels(g, mask);
    EdgeCut ec;
    if (is_minimal_two_sided(g, cut, label, &ec)) out.push_back(std::move(ec));
    for (int e : cut) mask[e] = 0;
  };
  if (k == 2) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) test({a, b});
  } else {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) test({a, b, c});
  }
  return out;
}

}  // namespace normalcol
