#include "normalcol/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace normalcol {

std::vector<int> Multigraph::neighbors(int v) const {
  std::vector<int> out;
  for (int e : incident(v)) out.push_back(edges_[e].other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Multigraph::is_simple() const {
  for (int v = 0; v < vertex_count(); ++v) {
    std::vector<int> nb;
    for (int e : inc_[v]) nb.push_back(edges_[e].other(v));
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
  }
  return true;
}

bool Multigraph::is_connected() const {
  int n = vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : inc_[v]) {
      int w = edges_[e].other(v);
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

bool Multigraph::is_regular(int d) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) != d) return false;
  return true;
}

ContractionResult contract(const Multigraph& g, const std::vector<std::vector<int>>& parts) {
  int n = g.vertex_count();
  std::vector<int> part_of(n, -1);
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("contract: empty part");
    for (int v : parts[p]) {
      if (v < 0 || v >= n) throw std::invalid_argument("contract: vertex out of range");
      if (part_of[v] != -1) throw std::invalid_argument("contract: overlapping parts");
      part_of[v] = static_cast<int>(p);
    }
  }
  // Each part must induce a connected subgraph.
  for (size_t p = 0; p < parts.size(); ++p) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {parts[p][0]};
    seen[parts[p][0]] = 1;
    size_t visited = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        int w = g.edge(e).other(v);
        if (part_of[w] == static_cast<int>(p) && !seen[w]) {
          seen[w] = 1;
          ++visited;
          stack.push_back(w);
        }
      }
    }
    if (visited != parts[p].size())
      throw std::invalid_argument("contract: part does not induce a connected subgraph");
  }
  // Reject parts holding a parallel pair: such a contraction stands for a loop.
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (part_of[ed.u] != -1 && part_of[ed.u] == part_of[ed.v] &&
        g.multiplicity(ed.u, ed.v) > 1)
      throw std::invalid_argument("contract: part contains a parallel pair (would form a loop)");
  }

  // New vertex ids ordered by the smallest old vertex they absorb.
  std::vector<int> anchor(n);  // old vertex -> representative old vertex
  for (int v = 0; v < n; ++v)
    anchor[v] = part_of[v] == -1 ? v : *std::min_element(parts[part_of[v]].begin(),
                                                         parts[part_of[v]].end());
  std::vector<int> reps;
  for (int v = 0; v < n; ++v)
    if (anchor[v] == v) reps.push_back(v);

  ContractionResult r;
  r.graph = Multigraph(static_cast<int>(reps.size()));
  std::vector<int> new_id(n, -1);
  for (size_t i = 0; i < reps.size(); ++i) new_id[reps[i]] = static_cast<int>(i);
  r.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) r.vertex_map[v] = new_id[anchor[v]];

  r.edge_map.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    int nu = r.vertex_map[g.edge(e).u], nv = r.vertex_map[g.edge(e).v];
    if (nu == nv) continue;  // intra-part edge dropped
    r.edge_map[e] = r.graph.add_edge(nu, nv);
    r.edge_origin.push_back(e);
  }
  return r;
}

}  // namespace normalcol
