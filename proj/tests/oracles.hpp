#pragma once
// Independent re-implementations used to cross-check the library. Everything
// here is deliberately naive: union-find connectivity, subset enumeration for
// cuts and matchings, set arithmetic for edge classification. Slow but obvious.
#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "normalcol/coloring.hpp"
#include "normalcol/flows.hpp"
#include "normalcol/multigraph.hpp"

namespace oracle {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Number of connected components after deleting the edges in `removed`.
inline int component_count(const normalcol::Multigraph& g,
                           const std::vector<int>& removed = {}) {
  std::vector<char> gone(g.edge_count(), 0);
  for (int e : removed) gone[e] = 1;
  UnionFind uf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e)
    if (!gone[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  std::set<int> roots;
  for (int v = 0; v < g.vertex_count(); ++v) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

inline bool connected(const normalcol::Multigraph& g) { return component_count(g) == 1; }

inline std::vector<int> bridges(const normalcol::Multigraph& g) {
  int base = component_count(g);
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (component_count(g, std::vector<int>{e}) > base) out.push_back(e);
  return out;
}

// All minimal edge cuts of size at most k of a connected graph, as sorted edge
// lists in lexicographic order. A subset is a cut when its removal disconnects
// the graph, and minimal when no proper subset is also a cut.
inline std::vector<std::vector<int>> small_cuts(const normalcol::Multigraph& g, int k) {
  int m = g.edge_count();
  std::vector<std::vector<int>> cuts;
  std::vector<int> pick;
  auto disconnects = [&](const std::vector<int>& s) { return component_count(g, s) > 1; };
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (!pick.empty() && disconnects(pick)) {
      bool minimal = true;
      for (size_t skip = 0; skip < pick.size() && minimal; ++skip) {
        std::vector<int> sub;
        for (size_t i = 0; i < pick.size(); ++i)
          if (i != skip) sub.push_back(pick[i]);
        if (!sub.empty() && disconnects(sub)) minimal = false;
      }
      if (minimal) cuts.push_back(pick);
      return;  // supersets of a cut are never minimal
    }
    if (left == 0) return;
    for (int e = start; e < m; ++e) {
      pick.push_back(e);
      rec(e + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(0, k);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

// All perfect matchings as sorted edge lists, lexicographically ordered.
inline std::vector<std::vector<int>> perfect_matchings(const normalcol::Multigraph& g) {
  int n = g.vertex_count(), m = g.edge_count();
  std::vector<std::vector<int>> out;
  std::vector<char> used(n, 0);
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int e) {
    if (static_cast<int>(pick.size()) * 2 == n) {
      out.push_back(pick);
      return;
    }
    if (e == m) return;
    rec(e + 1);
    const normalcol::Edge& ed = g.edge(e);
    if (!used[ed.u] && !used[ed.v]) {
      used[ed.u] = used[ed.v] = 1;
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
      used[ed.u] = used[ed.v] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool proper(const normalcol::Multigraph& g, const std::vector<int>& colors) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> seen;
    for (int e : g.incident(v))
      if (!seen.insert(colors[e]).second) return false;
  }
  return true;
}

inline std::set<int> star(const normalcol::Multigraph& g, const std::vector<int>& colors,
                          int v) {
  std::set<int> s;
  for (int e : g.incident(v)) s.insert(colors[e]);
  return s;
}

// Classification straight from the definition: the union of the two endpoint
// palettes of a cubic graph's edge has size 3 (poor), 5 (rich) or 4 (neither).
inline normalcol::EdgeClass classify(const normalcol::Multigraph& g,
                                     const std::vector<int>& colors, int e) {
  std::set<int> s = star(g, colors, g.edge(e).u);
  for (int c : star(g, colors, g.edge(e).v)) s.insert(c);
  if (s.size() == 3) return normalcol::EdgeClass::Poor;
  if (s.size() == 5) return normalcol::EdgeClass::Rich;
  return normalcol::EdgeClass::Neither;
}

inline bool has_claw(const normalcol::Multigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> nb = g.neighbors(v);
    int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int l = j + 1; l < d; ++l)
          if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[l]) &&
              !g.adjacent(nb[j], nb[l]))
            return true;
  }
  return false;
}

// Shortest cycle length; parallel edges make the girth 2. -1 when acyclic.
inline int girth(const normalcol::Multigraph& g) {
  int best = -1;
  for (int s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1), via(g.vertex_count(), -1);
    std::vector<int> queue = {s};
    dist[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int e : g.incident(u)) {
        int w = g.edge(e).other(u);
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          via[w] = e;
          queue.push_back(w);
        } else if (e != via[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// Exhaustive count of nowhere-zero Z_2^k flows (k-bit values, XOR balance at
// every vertex). Only sane for tiny graphs.
inline long long count_nz_flows(const normalcol::Multigraph& g, int k) {
  int m = g.edge_count(), n = g.vertex_count();
  int top = (1 << k) - 1;
  std::vector<int> val(m, 0);
  std::vector<int> remaining(n, 0);
  for (int v = 0; v < n; ++v) remaining[v] = g.degree(v);
  std::vector<int> acc(n, 0);
  long long count = 0;
  std::function<void(int)> rec = [&](int e) {
    if (e == m) {
      ++count;
      return;
    }
    const normalcol::Edge& ed = g.edge(e);
    for (int x = 1; x <= top; ++x) {
      acc[ed.u] ^= x;
      acc[ed.v] ^= x;
      --remaining[ed.u];
      --remaining[ed.v];
      bool ok = (remaining[ed.u] > 0 || acc[ed.u] == 0) &&
                (remaining[ed.v] > 0 || acc[ed.v] == 0);
      if (ok) rec(e + 1);
      ++remaining[ed.u];
      ++remaining[ed.v];
      acc[ed.u] ^= x;
      acc[ed.v] ^= x;
    }
  };
  rec(0);
  return count;
}

// Maximum number of normal edges over all proper k-edge-colorings, by plain
// backtracking with a color-symmetry break on edge 0. Tiny graphs only.
inline int max_normal_brute(const normalcol::Multigraph& g, int k) {
  int m = g.edge_count();
  std::vector<int> colors(m, 0);
  int best = -1;
  std::function<void(int)> rec = [&](int e) {
    if (e == m) {
      int normal = 0;
      for (int i = 0; i < m; ++i)
        normal += classify(g, colors, i) != normalcol::EdgeClass::Neither;
      best = std::max(best, normal);
      return;
    }
    int top = (e == 0) ? 1 : k;  // color names are interchangeable
    for (int c = 1; c <= top; ++c) {
      bool clash = false;
      for (int end : {g.edge(e).u, g.edge(e).v})
        for (int e2 : g.incident(end))
          if (e2 != e && colors[e2] == c) clash = true;
      if (clash) continue;
      colors[e] = c;
      rec(e + 1);
      colors[e] = 0;
    }
  };
  rec(0);
  return best;
}

}  // namespace oracle
