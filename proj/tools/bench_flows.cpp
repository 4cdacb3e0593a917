// Benchmark: serial vs sharded exhaustive nonconflicting-flow search.
// The sharded kernel must return the same witness as the serial reference.
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "normalcol/flows.hpp"
#include "normalcol/generators.hpp"
#include "normalcol/multigraph.hpp"

namespace nc = normalcol;

namespace {

nc::Multigraph prism() {
  nc::Multigraph g(6);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

nc::Multigraph k33() {
  nc::Multigraph g(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) g.add_edge(a, b);
  return g;
}

double run_ms(const nc::CubicView& g, bool parallel,
              std::optional<nc::NonconflictingWitness>& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = nc::search_nonconflicting_flow(g, parallel);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same_witness(const std::optional<nc::NonconflictingWitness>& a,
                  const std::optional<nc::NonconflictingWitness>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->flow.values == b->flow.values && a->alpha == b->alpha && a->beta == b->beta;
}

}  // namespace

int main() {
  struct Case {
    std::string name;
    nc::CubicView g;
  };
  std::vector<Case> cases;
  cases.push_back({"k4", nc::k4()});
  cases.push_back({"k33", nc::CubicView(k33())});
  cases.push_back({"prism", nc::CubicView(prism())});
  cases.push_back({"petersen", nc::petersen()});
  cases.push_back({"random-14", nc::random_bridgeless_cubic(14, 7)});
  cases.push_back({"random-16", nc::random_bridgeless_cubic(16, 7)});

  std::printf("%-12s %6s %6s %12s %12s %9s %8s\n", "graph", "n", "m", "serial_ms",
              "sharded_ms", "speedup", "witness");
  std::printf("threads: %d\n", nc::thread_cap());
  bool all_match = true;
  for (const Case& c : cases) {
    std::optional<nc::NonconflictingWitness> ws, wp;
    double serial = run_ms(c.g, false, ws);
    double shard = run_ms(c.g, true, wp);
    bool match = same_witness(ws, wp);
    all_match = all_match && match;
    std::printf("%-12s %6d %6d %12.2f %12.2f %8.2fx %8s%s\n", c.name.c_str(),
                c.g.vertex_count(), c.g.edge_count(), serial, shard,
                shard > 0 ? serial / shard : 0.0, ws ? "yes" : "no",
                match ? "" : "  MISMATCH");
  }
  if (!all_match) {
    std::fprintf(stderr, "sharded search disagreed with the serial reference\n");
    return 1;
  }
  return 0;
}
