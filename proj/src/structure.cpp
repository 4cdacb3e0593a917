#include "normalcol/structure.hpp"

#include <algorithm>
#include <set>

namespace normalcol {

bool is_claw_free(const Multigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int k = j + 1; k < d; ++k)
          if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[k]) &&
              !g.adjacent(nb[j], nb[k]))
            return false;
  }
  return true;
}

TrianglesAndDiamonds find_triangles_and_diamonds(const Multigraph& g) {
  if (!g.is_regular(3))
    throw std::invalid_argument("find_triangles_and_diamonds: graph is not cubic");
  TrianglesAndDiamonds out;
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    auto nb = g.neighbors(a);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int b = nb[i], c = nb[j];
        if (a > b || b > c) continue;  // emit each triangle once, at its least vertex
        if (!g.adjacent(b, c)) continue;
        if (g.multiplicity(a, b) != 1 || g.multiplicity(a, c) != 1 ||
            g.multiplicity(b, c) != 1)
          continue;
        out.triangles.push_back({a, b, c});
      }
    }
  }
  std::sort(out.triangles.begin(), out.triangles.end());

  // A diamond is two triangles sharing an edge, with the two off-edge vertices
  // (the poles) nonadjacent so the subgraph is induced.
  std::set<std::array<int, 4>> seen;
  for (size_t i = 0; i < out.triangles.size(); ++i) {
    for (size_t j = i + 1; j < out.triangles.size(); ++j) {
      const auto& t1 = out.triangles[i];
      const auto& t2 = out.triangles[j];
      std::vector<int> shared;
      std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(),
                            std::back_inserter(shared));
      if (shared.size() != 2) continue;
      std::vector<int> all;
      std::set_union(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(all));
      int p1 = -1, p2 = -1;
      for (int v : all)
        if (v != shared[0] && v != shared[1]) (p1 == -1 ? p1 : p2) = v;
      if (g.adjacent(p1, p2)) continue;  // K4 or more: not induced K4-e
      std::array<int, 4> key = {all[0], all[1], all[2], all[3]};
      if (!seen.insert(key).second) continue;
      Diamond d;
      d.pole_u = std::min(p1, p2);
      d.pole_v = std::max(p1, p2);
      d.center_x = shared[0];
      d.center_y = shared[1];
      out.diamonds.push_back(d);
    }
  }
  std::sort(out.diamonds.begin(), out.diamonds.end(), [](const Diamond& a, const Diamond& b) {
    auto ka = a.vertices(), kb = b.vertices();
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
  });
  return out;
}

}  // namespace normalcol
