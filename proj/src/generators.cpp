#include "normalcol/generators.hpp"

#include <algorithm>
#include <random>

#include "normalcol/cuts.hpp"

namespace normalcol {

CubicView petersen() {
  Multigraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);          // outer cycle
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);  // pentagram
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);                // spokes
  return CubicView(g);
}

CubicView k4() {
  Multigraph g(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  return CubicView(g);
}

CubicView theta() {
  Multigraph g(2);
  for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
  return CubicView(g);
}

HalinSpec canonical_halin(int leaves) {
  if (leaves < 3) throw std::invalid_argument("canonical_halin: need at least 3 leaves");
  HalinSpec spec;
  if (leaves == 3) {
    spec.tree = Multigraph(4);  // center 0, leaves 1,2,3
    spec.tree.add_edge(0, 1);
    spec.tree.add_edge(0, 2);
    spec.tree.add_edge(0, 3);
    spec.leaf_order = {1, 2, 3};
    return spec;
  }
  // Caterpillar: internal path p_0..p_{k-1}; the ends carry two leaves each,
  // the middles one. Clockwise: first end leaf, top leaves, both far-end
  // leaves, back to the remaining first-end leaf.
  int k = leaves - 2;
  Multigraph t(k);
  for (int i = 0; i + 1 < k; ++i) t.add_edge(i, i + 1);
  std::vector<int> order;
  int a = t.add_vertex();
  t.add_edge(0, a);
  order.push_back(a);
  for (int i = 1; i + 1 < k; ++i) {
    int l = t.add_vertex();
    t.add_edge(i, l);
    order.push_back(l);
  }
  int c = t.add_vertex();
  t.add_edge(k - 1, c);
  order.push_back(c);
  int d = t.add_vertex();
  t.add_edge(k - 1, d);
  order.push_back(d);
  int b = t.add_vertex();
  t.add_edge(0, b);
  order.push_back(b);
  spec.tree = std::move(t);
  spec.leaf_order = std::move(order);
  return spec;
}

namespace {

void validate_halin(const HalinSpec& spec) {
  const Multigraph& t = spec.tree;
  int n = t.vertex_count();
  if (n < 4 || t.edge_count() != n - 1 || !t.is_connected())
    throw std::invalid_argument("treelike_snark: tree must be a connected acyclic graph");
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    int d = t.degree(v);
    if (d == 1) leaves.push_back(v);
    else if (d != 3)
      throw std::invalid_argument("treelike_snark: internal tree vertices must have degree 3");
  }
  if (leaves.size() < 3) throw std::invalid_argument("treelike_snark: need at least 3 leaves");
  std::vector<int> sorted_order = spec.leaf_order;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != leaves)
    throw std::invalid_argument("treelike_snark: leaf_order must permute the tree leaves");
}

}  // namespace

TreelikeResult treelike_snark(const HalinSpec& spec) {
  validate_halin(spec);
  const Multigraph& t = spec.tree;
  int n = static_cast<int>(spec.leaf_order.size());
  OpenGraph assembly;
  OpenGraph block = five_zone();
  std::vector<TreelikeBlock> blocks(n);
  for (int i = 0; i < n; ++i) {
    std::string tag = "#" + std::to_string(i);
    int off = assembly.absorb(block, tag);
    for (int v = 0; v < 11; ++v) blocks[i].verts[v] = off + v;
    for (int e = 0; e < 14; ++e) blocks[i].edges[e] = i * 14 + e;
    assembly.remove_stub("b3" + tag);  // the b3 end is identified with the leaf
  }
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    std::string ti = "#" + std::to_string(i), tj = "#" + std::to_string(j);
    blocks[i].join_a = assembly.join_stubs("b4" + ti, "b2" + tj);
    blocks[i].join_b = assembly.join_stubs("b5" + ti, "b1" + tj);
  }
  // Tree vertices: leaves land on their copy's n40; internals are fresh.
  std::vector<int> tree_vertex_map(t.vertex_count(), -1);
  for (int i = 0; i < n; ++i)
    tree_vertex_map[spec.leaf_order[i]] = blocks[i].verts[five_zone_ix::n40];
  for (int v = 0; v < t.vertex_count(); ++v)
    if (tree_vertex_map[v] == -1) tree_vertex_map[v] = assembly.add_vertex();
  std::vector<int> tree_edge_map(t.edge_count(), -1);
  for (int e = 0; e < t.edge_count(); ++e) {
    const Edge& ed = t.edge(e);
    tree_edge_map[e] = assembly.add_edge(tree_vertex_map[ed.u], tree_vertex_map[ed.v]);
    for (int w : {ed.u, ed.v})
      if (t.degree(w) == 1) {
        int copy = -1;
        for (int i = 0; i < n; ++i)
          if (spec.leaf_order[i] == w) copy = i;
        blocks[copy].pendant_edge = tree_edge_map[e];
      }
  }
  TreelikeResult r{assembly.close(), std::move(blocks), std::move(tree_vertex_map),
                   std::move(tree_edge_map)};
  if (!is_bridgeless(r.graph.graph()))
    throw std::logic_error("treelike_snark: assembled graph is not bridgeless");
  return r;
}

CyclePermResult cycle_permutation(const CyclePermSpec& spec) {
  int n = spec.n;
  if (n < 3) throw std::invalid_argument("cycle_permutation: n must be at least 3");
  if (static_cast<int>(spec.p.size()) != n)
    throw std::invalid_argument("cycle_permutation: permutation length must equal n");
  std::vector<char> seen(n, 0);
  for (int x : spec.p) {
    if (x < 0 || x >= n || seen[x])
      throw std::invalid_argument("cycle_permutation: p is not a permutation of 0..n-1");
    seen[x] = 1;
  }
  if (spec.p[0] != 0) throw std::invalid_argument("cycle_permutation: p[0] must be 0");
  Multigraph g(2 * n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);          // outer
  for (int i = 0; i < n; ++i) g.add_edge(n + i, n + (i + 1) % n);  // inner
  for (int i = 0; i < n; ++i) g.add_edge(n + i, spec.p[i]);        // matching
  // Both cycles must be chordless in the result.
  for (const Edge& e : g.edges()) {
    bool both_outer = e.u < n && e.v < n;
    bool both_inner = e.u >= n && e.v >= n;
    if (!both_outer && !both_inner) continue;
    int a = both_outer ? e.u : e.u - n;
    int b = both_outer ? e.v : e.v - n;
    int d = ((a - b) % n + n) % n;
    if (d != 1 && d != n - 1)
      throw std::invalid_argument("cycle_permutation: a cycle acquired a chord");
  }
  return CyclePermResult{CubicView(g), n, spec.p};
}

int expansion_corner(const CubicView& h, int v, int e) {
  const auto& inc = h.graph().incident(v);
  for (size_t r = 0; r < inc.size(); ++r)
    if (inc[r] == e) return 3 * v + static_cast<int>(r);
  throw std::invalid_argument("expansion_corner: edge not incident to vertex");
}

TriangleExpansion triangle_expand(const CubicView& h) {
  const Multigraph& H = h.graph();
  int n = H.vertex_count(), m = H.edge_count();
  Multigraph g(3 * n);
  TriangleExpansion out{CubicView(Multigraph(0)), {}, {}, {}};
  out.edge_map.resize(m);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = H.edge(e);
    out.edge_map[e] = g.add_edge(expansion_corner(h, ed.u, e), expansion_corner(h, ed.v, e));
  }
  out.triangle_of_vertex.resize(n);
  out.triangle_edges.resize(n);
  for (int v = 0; v < n; ++v) {
    out.triangle_of_vertex[v] = {3 * v, 3 * v + 1, 3 * v + 2};
    out.triangle_edges[v] = {g.add_edge(3 * v, 3 * v + 1), g.add_edge(3 * v, 3 * v + 2),
                             g.add_edge(3 * v + 1, 3 * v + 2)};
  }
  out.graph = CubicView(g);
  return out;
}

Multigraph replace_edge_with_diamond_string(const Multigraph& g, int e, int k) {
  if (k < 1) throw std::invalid_argument("replace_edge_with_diamond_string: k must be >= 1");
  if (e < 0 || e >= g.edge_count())
    throw std::invalid_argument("replace_edge_with_diamond_string: edge out of range");
  int u = g.edge(e).u, v = g.edge(e).v;
  Multigraph out(g.vertex_count());
  for (int f = 0; f < g.edge_count(); ++f)
    if (f != e) out.add_edge(g.edge(f).u, g.edge(f).v);
  // Diamond j: pole_in, center_a, center_b, pole_out.
  std::vector<int> pole_in(k), pole_out(k);
  for (int j = 0; j < k; ++j) {
    int pi = out.add_vertex(), ca = out.add_vertex(), cb = out.add_vertex(),
        po = out.add_vertex();
    out.add_edge(pi, ca);
    out.add_edge(pi, cb);
    out.add_edge(ca, cb);
    out.add_edge(ca, po);
    out.add_edge(cb, po);
    pole_in[j] = pi;
    pole_out[j] = po;
  }
  out.add_edge(u, pole_in[0]);
  for (int j = 0; j + 1 < k; ++j) out.add_edge(pole_out[j], pole_in[j + 1]);
  out.add_edge(pole_out[k - 1], v);
  return out;
}

CubicView ring_of_diamonds(int k) {
  if (k < 2) throw std::invalid_argument("ring_of_diamonds: k must be >= 2");
  Multigraph g;
  std::vector<int> pole_in(k), pole_out(k);
  for (int j = 0; j < k; ++j) {
    int pi = g.add_vertex(), ca = g.add_vertex(), cb = g.add_vertex(), po = g.add_vertex();
    g.add_edge(pi, ca);
    g.add_edge(pi, cb);
    g.add_edge(ca, cb);
    g.add_edge(ca, po);
    g.add_edge(cb, po);
    pole_in[j] = pi;
    pole_out[j] = po;
  }
  for (int j = 0; j < k; ++j) g.add_edge(pole_out[j], pole_in[(j + 1) % k]);
  return CubicView(g);
}

CubicView random_bridgeless_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("random_bridgeless_cubic: n must be even and at least 4");
  std::mt19937_64 rng(seed);
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    bool loop = false;
    for (int i = 0; i < 3 * n; i += 2)
      if (points[i] == points[i + 1]) { loop = true; break; }
    if (loop) continue;
    Multigraph g(n);
    for (int i = 0; i < 3 * n; i += 2) g.add_edge(points[i], points[i + 1]);
    if (!g.is_connected() || !is_bridgeless(g)) continue;
    return CubicView(g);
  }
  throw std::logic_error("random_bridgeless_cubic: sampling failed to converge");
}

}  // namespace normalcol
