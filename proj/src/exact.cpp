#include "normalcol/exact.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace normalcol {

namespace {

using Clock = std::chrono::steady_clock;

// Shared proper-coloring search engine. Modes: find one normal coloring
// (normality pruning on), find one proper coloring (pruning off), or maximize
// the number of normal edges (branch and bound on locked Neither edges).
struct Searcher {
  enum class Mode { ExistsNormal, ExistsProper, MaxNormal };

  const Multigraph& g;
  int k;
  Mode mode;
  SolveBudget budget;
  Clock::time_point t0 = Clock::now();

  int m;
  std::vector<std::vector<int>> adj;  // edges sharing an endpoint with e
  std::vector<int> color;             // 0 = unassigned
  std::vector<unsigned> used;         // per-vertex bitmask of colors
  int uncolored;
  int neither_locked = 0;

  long long nodes = 0;
  bool budget_hit = false;
  bool found = false;
  std::vector<int> witness;
  int best_count = -1;
  std::vector<int> best_coloring;

  Searcher(const Multigraph& graph, int colors, Mode md, SolveBudget b)
      : g(graph), k(colors), mode(md), budget(b), m(g.edge_count()) {
    adj.resize(m);
    for (int e = 0; e < m; ++e) {
      std::set<int> s;
      for (int w : {g.edge(e).u, g.edge(e).v})
        for (int f : g.incident(w))
          if (f != e) s.insert(f);
      adj[e].assign(s.begin(), s.end());
    }
    color.assign(m, 0);
    used.assign(g.vertex_count(), 0);
    uncolored = m;
  }

  bool over_budget() {
    if (budget_hit) return true;
    if (nodes > budget.max_nodes) { budget_hit = true; return true; }
    if ((nodes & 1023) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
      if (ms > budget.max_ms) { budget_hit = true; return true; }
    }
    return false;
  }

  bool surrounded(int e) const {
    if (color[e] == 0) return false;
    for (int f : adj[e])
      if (color[f] == 0) return false;
    return true;
  }

  EdgeClass classify_partial(int e) const {
    unsigned seen = 0;
    for (int w : {g.edge(e).u, g.edge(e).v})
      for (int f : g.incident(w)) seen |= 1u << color[f];
    int cnt = __builtin_popcount(seen & ~1u);
    if (cnt == 3) return EdgeClass::Poor;
    if (cnt == 5) return EdgeClass::Rich;
    return EdgeClass::Neither;
  }

  // Assign color c to edge e; returns newly fully-surrounded edges through
  // `completed` and false if the branch must be pruned. Caller must unassign.
  bool assign(int e, int c, std::vector<int>& completed) {
    ++nodes;
    color[e] = c;
    used[g.edge(e).u] |= 1u << c;
    used[g.edge(e).v] |= 1u << c;
    --uncolored;
    completed.clear();
    if (surrounded(e)) completed.push_back(e);
    for (int f : adj[e])
      if (surrounded(f)) completed.push_back(f);
    for (int f : completed) {
      EdgeClass cl = classify_partial(f);
      if (cl == EdgeClass::Neither) {
        if (mode == Mode::ExistsNormal) return false;
        if (mode == Mode::MaxNormal) ++neither_locked;
      }
    }
    return true;
  }

  void unassign(int e, const std::vector<int>& completed) {
    if (mode == Mode::MaxNormal)
      for (int f : completed)
        if (classify_partial(f) == EdgeClass::Neither) --neither_locked;
    int c = color[e];
    color[e] = 0;
    used[g.edge(e).u] &= ~(1u << c);
    used[g.edge(e).v] &= ~(1u << c);
    ++uncolored;
  }

  unsigned available(int e) const {
    unsigned full = ((1u << (k + 1)) - 2);  // bits 1..k
    return full & ~(used[g.edge(e).u] | used[g.edge(e).v]);
  }

  int pick_edge() const {
    int best = -1, best_cnt = k + 1;
    for (int e = 0; e < m; ++e) {
      if (color[e] != 0) continue;
      int cnt = __builtin_popcount(available(e));
      if (cnt < best_cnt) { best_cnt = cnt; best = e; }
    }
    return best;
  }

  void on_leaf() {
    if (mode == Mode::MaxNormal) {
      int normal = m - neither_locked;
      if (normal > best_count) {
        best_count = normal;
        best_coloring = color;
      }
      return;
    }
    found = true;
    witness = color;
  }

  bool done() const {
    return budget_hit || (found && mode != Mode::MaxNormal);
  }

  void search() {
    if (done()) return;
    if (over_budget()) return;
    if (uncolored == 0) { on_leaf(); return; }
    if (mode == Mode::MaxNormal && m - neither_locked <= best_count) return;
    int e = pick_edge();
    unsigned av = available(e);
    std::vector<int> completed;
    for (int c = 1; c <= k; ++c) {
      if (!(av & (1u << c))) continue;
      if (assign(e, c, completed)) search();
      unassign(e, completed);
      if (done()) return;
    }
  }

  // Pin the three edges at vertex 0 to colors 1, 2, 3 (any proper coloring can
  // be renamed into this form, and renaming preserves every edge class).
  bool pin_vertex0() {
    if (g.vertex_count() == 0) return true;
    std::vector<int> completed;
    int c = 1;
    for (int e : g.incident(0)) {
      if (!assign(e, c, completed)) return false;
      ++c;
    }
    return true;
  }
};

long long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

}  // namespace

SolveResult exists_normal_k(const CubicView& g, int k, SolveBudget budget) {
  if (budget.max_nodes <= 0 || budget.max_ms <= 0)
    throw std::invalid_argument("exists_normal_k: budget limits must be positive");
  SolveResult r;
  if (k < 3 && g.edge_count() > 0) {
    r.status = SolveStatus::None;
    return r;
  }
  if (k > 31) throw std::invalid_argument("exists_normal_k: k too large");
  Searcher s(g.graph(), k, Searcher::Mode::ExistsNormal, budget);
  if (s.pin_vertex0()) s.search();
  r.nodes = s.nodes;
  r.ms = elapsed_ms(s.t0);
  if (s.found) {
    EdgeColoring c{k, s.witness};
    NormalityReport rep = report(g.graph(), c);
    if (!rep.is_normal())
      throw std::logic_error("exists_normal_k: witness failed verification");
    r.status = SolveStatus::Found;
    r.coloring = std::move(c);
  } else if (s.budget_hit) {
    r.status = SolveStatus::Indeterminate;
  } else {
    r.status = SolveStatus::None;
  }
  return r;
}

MinColorsResult min_normal_colors(const CubicView& g, int kmax, SolveBudget budget) {
  MinColorsResult out;
  for (int k = 3; k <= kmax; ++k) {
    SolveResult r = exists_normal_k(g, k, budget);
    if (r.status == SolveStatus::Found) {
      out.status = SolveStatus::Found;
      out.k = k;
      out.witness = std::move(r.coloring);
      return out;
    }
    if (r.status == SolveStatus::Indeterminate) {
      out.status = SolveStatus::Indeterminate;
      out.k = k;
      return out;
    }
  }
  out.status = SolveStatus::None;  // no level up to kmax admits one
  return out;
}

bool is_3_edge_colorable(const CubicView& g) {
  Searcher s(g.graph(), 3, Searcher::Mode::ExistsProper, SolveBudget{});
  if (s.pin_vertex0()) s.search();
  if (s.found) {
    EdgeColoring c{3, s.witness};
    if (!is_proper(g.graph(), c))
      throw std::logic_error("is_3_edge_colorable: witness failed verification");
  }
  return s.found;
}

MaxNormalResult max_normal_edges(const CubicView& g, int k, SolveBudget budget) {
  MaxNormalResult out;
  if (k < 3 && g.edge_count() > 0) {
    out.status = SolveStatus::None;  // no proper coloring at all below 3 colors
    return out;
  }
  if (k > 31) throw std::invalid_argument("max_normal_edges: k too large");
  // All-normal shortcut: if a normal k-coloring exists the optimum is m.
  SolveResult all = exists_normal_k(g, k, budget);
  if (all.status == SolveStatus::Found) {
    out.status = SolveStatus::Found;
    out.count = g.edge_count();
    out.coloring = std::move(all.coloring);
    return out;
  }
  if (all.status == SolveStatus::Indeterminate) return out;

  Searcher s(g.graph(), k, Searcher::Mode::MaxNormal, budget);
  if (s.pin_vertex0()) s.search();
  if (s.budget_hit) {
    out.status = SolveStatus::Indeterminate;
    if (s.best_count >= 0) {
      out.count = s.best_count;  // best found, not proven optimal
      out.coloring = EdgeColoring{k, s.best_coloring};
    }
    return out;
  }
  if (s.best_count < 0) {
    // No proper k-coloring at all (cannot happen for k >= 4 by Vizing).
    out.status = SolveStatus::None;
    return out;
  }
  EdgeColoring c{k, s.best_coloring};
  NormalityReport rep = report(g.graph(), c);
  if (rep.poor + rep.rich != s.best_count || !rep.proper)
    throw std::logic_error("max_normal_edges: optimum failed verification");
  out.status = SolveStatus::Found;
  out.count = s.best_count;
  out.coloring = std::move(c);
  return out;
}

}  // namespace normalcol
