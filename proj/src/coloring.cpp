#include "normalcol/coloring.hpp"

namespace normalcol {

namespace {
void check_total(const Multigraph& g, const EdgeColoring& c, const char* who) {
  if (static_cast<int>(c.assignment.size()) != g.edge_count())
    throw std::invalid_argument(std::string(who) + ": coloring not total over edges");
  for (int x : c.assignment)
    if (x < 1 || x > c.k)
      throw std::invalid_argument(std::string(who) + ": color out of range 1..k");
}
}  // namespace

std::set<int> color_set(const Multigraph& g, const EdgeColoring& c, int v) {
  check_total(g, c, "color_set");
  std::set<int> s;
  for (int e : g.incident(v)) s.insert(c.assignment[e]);
  return s;
}

bool is_proper(const Multigraph& g, const EdgeColoring& c) {
  check_total(g, c, "is_proper");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> s;
    for (int e : g.incident(v))
      if (!s.insert(c.assignment[e]).second) return false;
  }
  return true;
}

EdgeClass classify_edge(const Multigraph& g, const EdgeColoring& c, int e) {
  check_total(g, c, "classify_edge");
  const Edge& ed = g.edge(e);
  std::set<int> both;
  for (int f : g.incident(ed.u)) both.insert(c.assignment[f]);
  for (int f : g.incident(ed.v)) both.insert(c.assignment[f]);
  size_t sz = both.size();
  if (sz == 3) return EdgeClass::Poor;
  if (sz == 5) return EdgeClass::Rich;
  return EdgeClass::Neither;
}

NormalityReport report(const Multigraph& g, const EdgeColoring& c) {
  if (!g.is_regular(3)) throw std::invalid_argument("report: graph is not cubic");
  check_total(g, c, "report");
  NormalityReport r;
  r.proper = is_proper(g, c);
  r.classes.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    r.classes[e] = classify_edge(g, c, e);
    switch (r.classes[e]) {
      case EdgeClass::Poor: ++r.poor; break;
      case EdgeClass::Rich: ++r.rich; break;
      case EdgeClass::Neither: ++r.neither; break;
    }
  }
  int m = g.edge_count();
  r.normal_fraction = m == 0 ? Rational{0, 1} : Rational(r.poor + r.rich, m);
  return r;
}

const char* edge_class_name(EdgeClass cl) {
  switch (cl) {
    case EdgeClass::Poor: return "poor";
    case EdgeClass::Rich: return "rich";
    default: return "neither";
  }
}

}  // namespace normalcol
