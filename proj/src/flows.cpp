#include "normalcol/flows.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace normalcol {

namespace {

void check_flow_shape(const Multigraph& g, const FlowAssignment& f, const char* who) {
  if (f.k < 1 || f.k > 3) throw std::invalid_argument(std::string(who) + ": k must be 1..3");
  if (static_cast<int>(f.values.size()) != g.edge_count())
    throw std::invalid_argument(std::string(who) + ": flow not total over edges");
  for (GroupElem x : f.values)
    if (x >= (1u << f.k))
      throw std::invalid_argument(std::string(who) + ": value exceeds group width");
}

}  // namespace

bool is_nz_flow(const Multigraph& g, const FlowAssignment& f) {
  check_flow_shape(g, f, "is_nz_flow");
  for (GroupElem x : f.values)
    if (x == 0) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    GroupElem acc = 0;
    for (int e : g.incident(v)) acc ^= f.values[e];
    if (acc != 0) return false;
  }
  return true;
}

namespace {

// Deterministic connected ordering starting at edge 0: prefer an edge whose
// endpoints were both seen already (its value gets forced or pruned at once),
// then any edge touching a seen vertex, then the lowest index in a fresh
// component. Ties broken by edge index, so runs are reproducible.
std::vector<int> propagation_order(const Multigraph& g) {
  int m = g.edge_count();
  std::vector<int> order;
  order.reserve(m);
  std::vector<char> used(m, 0);
  std::vector<char> seen(g.vertex_count(), 0);
  for (int step = 0; step < m; ++step) {
    int best = -1, best_rank = -1;
    for (int e = 0; e < m; ++e) {
      if (used[e]) continue;
      int rank = seen[g.edge(e).u] + seen[g.edge(e).v];
      if (rank > best_rank) {
        best = e;
        best_rank = rank;
      }
    }
    used[best] = 1;
    seen[g.edge(best).u] = seen[g.edge(best).v] = 1;
    order.push_back(best);
  }
  return order;
}

// Backtracking over edge values 1..2^k-1 with vertex-sum pruning, visiting
// edges in propagation order (position 0 is always edge 0, so first_value > 0
// restricting edge 0's value still partitions the space across shards).
void enumerate_nz_flows(const Multigraph& g, int k, int first_value,
                        const std::function<bool(const std::vector<GroupElem>&)>& visit) {
  int m = g.edge_count();
  int n = g.vertex_count();
  int top = (1 << k) - 1;
  std::vector<int> order = propagation_order(g);
  std::vector<GroupElem> val(m, 0);
  std::vector<GroupElem> acc(n, 0);
  std::vector<int> rem(n, 0);
  for (int v = 0; v < n; ++v) rem[v] = g.degree(v);
  bool stop = false;
  std::function<void(int)> rec = [&](int pos) {
    if (stop) return;
    if (pos == m) {
      if (!visit(val)) stop = true;
      return;
    }
    int e = order[pos];
    const Edge& ed = g.edge(e);
    int lo = 1, hi = top;
    if (pos == 0 && first_value > 0) lo = hi = first_value;
    for (int x = lo; x <= hi && !stop; ++x) {
      bool ok = true;
      for (int w : {ed.u, ed.v}) {
        acc[w] ^= static_cast<GroupElem>(x);
        --rem[w];
        if ((rem[w] == 0 && acc[w] != 0) || (rem[w] == 1 && acc[w] == 0)) ok = false;
      }
      if (ok) {
        val[e] = static_cast<GroupElem>(x);
        rec(pos + 1);
        val[e] = 0;
      }
      for (int w : {ed.u, ed.v}) {
        acc[w] ^= static_cast<GroupElem>(x);
        ++rem[w];
      }
    }
  };
  rec(0);
}

}  // namespace

std::optional<FlowAssignment> find_nz_flow(const Multigraph& g, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("find_nz_flow: k must be 1..3");
  std::optional<FlowAssignment> out;
  enumerate_nz_flows(g, k, 0, [&](const std::vector<GroupElem>& v) {
    out = FlowAssignment{k, v};
    return false;
  });
  return out;
}

long long count_nz_flows(const Multigraph& g, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("count_nz_flows: k must be 1..3");
  long long c = 0;
  enumerate_nz_flows(g, k, 0, [&](const std::vector<GroupElem>&) {
    ++c;
    return true;
  });
  return c;
}

CycleContraction cycle_contraction(const CubicView& g, const Matching& m) {
  CycleContraction cc;
  cc.two_factor = complementary_two_factor(g, m);  // validates perfection
  const Multigraph& G = g.graph();
  cc.cycle_of_vertex.assign(G.vertex_count(), -1);
  for (size_t i = 0; i < cc.two_factor.cycles.size(); ++i)
    for (int v : cc.two_factor.cycles[i].vertices)
      cc.cycle_of_vertex[v] = static_cast<int>(i);
  cc.contracted = Multigraph(static_cast<int>(cc.two_factor.cycles.size()));
  std::vector<char> in_m(G.edge_count(), 0);
  for (int e : m.edges) in_m[e] = 1;
  cc.edge_to_contracted.assign(G.edge_count(), -1);
  for (int e = 0; e < G.edge_count(); ++e) {
    if (!in_m[e]) continue;
    int cu = cc.cycle_of_vertex[G.edge(e).u];
    int cv = cc.cycle_of_vertex[G.edge(e).v];
    if (cu == cv) {
      cc.edge_to_contracted[e] = -2;  // loop image dropped
    } else {
      cc.edge_to_contracted[e] = cc.contracted.add_edge(cu, cv);
      cc.contracted_origin.push_back(e);
    }
  }
  return cc;
}

FlowAssignment extend_matching_flow(const CubicView& g, const Matching& m,
                                    const FlowAssignment& theta) {
  const Multigraph& G = g.graph();
  CycleContraction cc = cycle_contraction(g, m);
  if (theta.k != 2)
    throw std::invalid_argument("extend_matching_flow: theta must be a Z_2^2 flow");
  if (!is_nz_flow(cc.contracted, theta))
    throw std::invalid_argument(
        "extend_matching_flow: theta is not a nowhere-zero flow on the contraction");

  std::vector<int> match_at(G.vertex_count(), -1);
  for (int e : m.edges) {
    match_at[G.edge(e).u] = e;
    match_at[G.edge(e).v] = e;
  }

  std::vector<GroupElem> mu(G.edge_count(), 0);
  for (int e : m.edges) {
    int ce = cc.edge_to_contracted[e];
    mu[e] = ce == -2 ? GroupElem{1} : theta.values[ce];  // (0, theta); same-cycle edges take 01
  }
  for (const Cycle& cyc : cc.two_factor.cycles) {
    int L = static_cast<int>(cyc.edges.size());
    mu[cyc.edges[0]] = 0b100;
    for (int i = 1; i < L; ++i)
      mu[cyc.edges[i]] = mu[cyc.edges[i - 1]] ^ mu[match_at[cyc.vertices[i]]];
    GroupElem close = mu[cyc.edges[L - 1]] ^ mu[match_at[cyc.vertices[0]]];
    if (close != mu[cyc.edges[0]])
      throw std::logic_error("extend_matching_flow: cycle propagation did not close");
  }
  FlowAssignment out{3, mu};
  std::vector<char> in_m(G.edge_count(), 0);
  for (int e : m.edges) in_m[e] = 1;
  for (int e = 0; e < G.edge_count(); ++e) {
    bool first_bit = (mu[e] & 0b100) != 0;
    if (in_m[e] == first_bit)
      throw std::logic_error("extend_matching_flow: first bit fails to separate the matching");
  }
  if (!is_nz_flow(G, out))
    throw std::logic_error("extend_matching_flow: extension is not a nowhere-zero flow");
  return out;
}

EdgeColoring flow_to_coloring(const Multigraph& g, const FlowAssignment& f) {
  if (!is_nz_flow(g, f))
    throw std::invalid_argument("flow_to_coloring: input is not a nowhere-zero flow");
  EdgeColoring c;
  c.k = (1 << f.k) - 1;
  c.assignment.reserve(f.values.size());
  for (GroupElem x : f.values) c.assignment.push_back(static_cast<int>(x));
  return c;
}

namespace {

// Apply the GF(2) matrix (encoded row-major, 3 bits per row, row 0 highest) to
// a 3-bit column vector.
GroupElem apply_matrix(int a, GroupElem x) {
  GroupElem r = 0;
  for (int i = 0; i < 3; ++i) {
    int row = (a >> (6 - 3 * i)) & 7;
    int bit = __builtin_parity(row & x);
    r = static_cast<GroupElem>(r | (bit << (2 - i)));
  }
  return r;
}

bool matrix_invertible(int a) {
  std::array<char, 8> seen{};
  for (GroupElem x = 0; x < 8; ++x) {
    GroupElem y = apply_matrix(a, x);
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

}  // namespace

EdgeColoring coloring_from_missing_value_flow(const Multigraph& g, const FlowAssignment& f) {
  if (f.k != 3 || !is_nz_flow(g, f))
    throw std::invalid_argument(
        "coloring_from_missing_value_flow: input is not a nowhere-zero Z_2^3 flow");
  std::array<char, 8> present{};
  for (GroupElem x : f.values) present[x] = 1;
  int gamma = -1;
  for (int x = 1; x < 8; ++x)
    if (!present[x]) { gamma = x; break; }
  if (gamma == -1)
    throw std::invalid_argument("coloring_from_missing_value_flow: no missing nonzero value");

  int mat = -1;
  for (int a = 0; a < 512; ++a) {
    if (apply_matrix(a, static_cast<GroupElem>(gamma)) != 0b111) continue;
    if (!matrix_invertible(a)) continue;
    mat = a;
    break;
  }
  if (mat == -1) throw std::logic_error("coloring_from_missing_value_flow: no matrix found");

  EdgeColoring c;
  c.k = 3;
  c.assignment.reserve(f.values.size());
  for (GroupElem x : f.values) {
    GroupElem y = apply_matrix(mat, x);
    int color;
    switch (y) {
      case 0b001: case 0b110: color = 1; break;
      case 0b010: case 0b101: color = 2; break;
      case 0b100: case 0b011: color = 3; break;
      default:
        throw std::logic_error("coloring_from_missing_value_flow: 111 not eliminated");
    }
    c.assignment.push_back(color);
  }
  if (!is_proper(g, c))
    throw std::logic_error("coloring_from_missing_value_flow: result is not proper");
  return c;
}

namespace {

// First (alpha, beta) in lexicographic order satisfying both matching and
// no-conflicting-edge conditions, or (0,0).
std::pair<GroupElem, GroupElem> first_good_pair(const Multigraph& g,
                                                const std::vector<GroupElem>& val) {
  int n = g.vertex_count();
  // sees[v] = bitmask of values present on edges at v.
  std::vector<int> sees(n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    sees[g.edge(e).u] |= 1 << val[e];
    sees[g.edge(e).v] |= 1 << val[e];
  }
  for (GroupElem a = 1; a < 8; ++a) {
    for (GroupElem b = 1; b < 8; ++b) {
      if (a == b) continue;
      bool ok = true;
      // (1) edges valued alpha or beta form a matching.
      for (int v = 0; v < n && ok; ++v) {
        int cnt = 0;
        for (int e : g.incident(v)) cnt += (val[e] == a || val[e] == b);
        if (cnt > 1) ok = false;
      }
      // (2) no edge joins an alpha-seeing end to a beta-seeing end.
      for (int e = 0; e < g.edge_count() && ok; ++e) {
        int su = sees[g.edge(e).u], sv = sees[g.edge(e).v];
        if (((su >> a) & 1 && (sv >> b) & 1) || ((su >> b) & 1 && (sv >> a) & 1)) ok = false;
      }
      if (ok) return {a, b};
    }
  }
  return {0, 0};
}

}  // namespace

std::optional<NonconflictingWitness> search_nonconflicting_flow(const CubicView& g,
                                                                bool parallel) {
  const Multigraph& G = g.graph();
  if (G.edge_count() == 0) return std::nullopt;

  auto run_shard = [&](int first_value,
                       const std::function<bool()>& abort) -> std::optional<NonconflictingWitness> {
    std::optional<NonconflictingWitness> found;
    enumerate_nz_flows(G, 3, first_value, [&](const std::vector<GroupElem>& val) {
      if (abort()) return false;
      auto [a, b] = first_good_pair(G, val);
      if (a != 0) {
        found = NonconflictingWitness{FlowAssignment{3, val}, a, b};
        return false;
      }
      return true;
    });
    return found;
  };

#ifdef _OPENMP
  if (parallel) {
    std::optional<NonconflictingWitness> results[7];
    std::atomic<int> best_shard{7};
    int threads = std::min(thread_cap(), 7);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int s = 0; s < 7; ++s) {
      auto r = run_shard(s + 1, [&]() { return best_shard.load() < s; });
      if (r) {
        results[s] = std::move(r);
        int cur = best_shard.load();
        while (s < cur && !best_shard.compare_exchange_weak(cur, s)) {}
      }
    }
    for (int s = 0; s < 7; ++s)
      if (results[s]) return results[s];
    return std::nullopt;
  }
#else
  (void)parallel;
#endif
  return run_shard(0, []() { return false; });
}

EdgeColoring merge_to_six(const Multigraph& g, const FlowAssignment& f, GroupElem alpha,
                          GroupElem beta) {
  if (f.k != 3)
    throw std::invalid_argument("merge_to_six: flow must be over Z_2^3");
  if (alpha == 0 || beta == 0 || alpha > 7 || beta > 7 || alpha == beta)
    throw std::invalid_argument("merge_to_six: alpha, beta must be distinct nonzero values");
  EdgeColoring c = flow_to_coloring(g, f);
  for (int& x : c.assignment)
    if (x == beta) x = alpha;
  return c;
}

int thread_cap() {
  const char* env = std::getenv("NORMALCOL_THREADS");
  if (env != nullptr) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace normalcol
