#include "normalcol/matchings.hpp"

#include <algorithm>

namespace normalcol {

bool is_matching(const Multigraph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (int e : m.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (used[ed.u] || used[ed.v]) return false;
    used[ed.u] = used[ed.v] = 1;
  }
  return true;
}

bool is_perfect_matching(const Multigraph& g, const Matching& m) {
  return is_matching(g, m) && static_cast<int>(m.edges.size()) * 2 == g.vertex_count();
}

void for_each_perfect_matching(const CubicView& cg,
                               const std::function<bool(const Matching&)>& visit) {
  const Multigraph& g = cg.graph();
  int n = g.vertex_count();
  if (n % 2 != 0) throw std::invalid_argument("for_each_perfect_matching: odd vertex count");
  std::vector<char> covered(n, 0);
  std::vector<int> chosen;
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!covered[i]) { v = i; break; }
    if (v == -1) {
      Matching m{chosen};
      std::sort(m.edges.begin(), m.edges.end());
      if (!visit(m)) stop = true;
      return;
    }
    for (int e : g.incident(v)) {
      int w = g.edge(e).other(v);
      if (covered[w]) continue;
      covered[v] = covered[w] = 1;
      chosen.push_back(e);
      rec();
      chosen.pop_back();
      covered[v] = covered[w] = 0;
      if (stop) return;
    }
  };
  rec();
}

std::vector<Matching> perfect_matchings(const CubicView& g) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Matching matching_meeting_3cuts(const CubicView& cg) {
  const Multigraph& g = cg.graph();
  if (!g.is_connected()) throw std::invalid_argument("matching_meeting_3cuts: graph must be connected");
  if (!is_bridgeless(g)) throw std::invalid_argument("matching_meeting_3cuts: graph has a bridge");
  auto cuts = enumerate_small_cuts(g, 3);
  Matching found;
  bool ok = false;
  for_each_perfect_matching(cg, [&](const Matching& m) {
    std::vector<char> in_m(g.edge_count(), 0);
    for (int e : m.edges) in_m[e] = 1;
    for (const EdgeCut& c : cuts) {
      int hits = 0;
      for (int e : c.edges) hits += in_m[e];
      if (hits != 1) return true;  // keep searching
    }
    found = m;
    ok = true;
    return false;
  });
  if (!ok)
    throw std::logic_error("matching_meeting_3cuts: no qualifying matching (guarantee violated)");
  return found;
}

TwoFactor complementary_two_factor(const CubicView& cg, const Matching& m) {
  const Multigraph& g = cg.graph();
  if (!is_perfect_matching(g, m))
    throw std::invalid_argument("complementary_two_factor: matching is not perfect");
  std::vector<char> in_m(g.edge_count(), 0);
  for (int e : m.edges) in_m[e] = 1;
  std::vector<char> used(g.edge_count(), 0);
  TwoFactor tf;
  for (int start = 0; start < g.vertex_count(); ++start) {
    // Find an unused complement edge at `start`, lowest index first.
    int first = -1;
    for (int e : g.incident(start))
      if (!in_m[e] && !used[e]) { first = e; break; }
    if (first == -1) continue;
    Cycle cyc;
    int v = start;
    int e = first;
    do {
      cyc.vertices.push_back(v);
      cyc.edges.push_back(e);
      used[e] = 1;
      v = g.edge(e).other(v);
      int next = -1;
      for (int f : g.incident(v))
        if (!in_m[f] && !used[f]) { next = f; break; }
      e = next;
    } while (e != -1);
    if (v != start)
      throw std::logic_error("complementary_two_factor: complement walk did not close");
    tf.cycles.push_back(std::move(cyc));
  }
  return tf;
}

}  // namespace normalcol
