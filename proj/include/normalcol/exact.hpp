#pragma once
#include <optional>

#include "normalcol/coloring.hpp"
#include "normalcol/multigraph.hpp"

namespace normalcol {

struct SolveBudget {
  long long max_nodes = 1'000'000'000'000LL;  // search-tree nodes
  long long max_ms = 86'400'000LL;            // wall clock
};

enum class SolveStatus { Found, None, Indeterminate };

struct SolveResult {
  SolveStatus status = SolveStatus::Indeterminate;
  std::optional<EdgeColoring> coloring;  // set iff Found; verified normal
  long long nodes = 0;
  long long ms = 0;
};

// Does g admit a normal k-edge-coloring? Backtracking over proper colorings,
// most-constrained edge first, colors at vertex 0 pinned to 1,2,3, branches
// pruned when a fully-surrounded edge goes Neither. Witnesses are re-verified
// before being returned.
SolveResult exists_normal_k(const CubicView& g, int k, SolveBudget budget = {});

struct MinColorsResult {
  SolveStatus status = SolveStatus::Indeterminate;  // Found or Indeterminate
  int k = -1;
  std::optional<EdgeColoring> witness;
};

// Least k in 3..kmax admitting a normal k-coloring; Indeterminate as soon as a
// level exhausts its budget.
MinColorsResult min_normal_colors(const CubicView& g, int kmax, SolveBudget budget = {});

// Plain proper-coloring search with three colors, no normality pruning.
bool is_3_edge_colorable(const CubicView& g);

struct MaxNormalResult {
  SolveStatus status = SolveStatus::Indeterminate;  // Found (optimum proven) or Indeterminate
  int count = -1;
  std::optional<EdgeColoring> coloring;
};

// Maximum number of normal edges over proper k-colorings, branch and bound; the
// bound is m minus the Neither edges already locked in.
MaxNormalResult max_normal_edges(const CubicView& g, int k, SolveBudget budget = {});

}  // namespace normalcol
