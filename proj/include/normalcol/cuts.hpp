#pragma once
#include <vector>

#include "normalcol/multigraph.hpp"

namespace normalcol {

// A minimal edge cut: removing `edges` splits the graph into exactly two
// components; `side` is the component containing the smallest vertex id.
struct EdgeCut {
  std::vector<int> edges;  // sorted edge indices
  std::vector<int> side;   // sorted vertex ids of one side
};

// Component labels (0-based, discovery order) ignoring the masked edges.
// mask may be empty (no edges removed) or size m with nonzero = removed.
std::vector<int> component_labels(const Multigraph& g, const std::vector<char>& mask);
int component_count(const Multigraph& g, const std::vector<char>& mask);

// Edges whose removal disconnects their component. Parallel edges never qualify.
std::vector<int> bridges(const Multigraph& g);

// True iff no component has a bridge (disconnected input judged per component).
bool is_bridgeless(const Multigraph& g);

// All minimal edge cuts of size exactly k (k in {2,3}), brute force with a
// connectivity recheck; requires a connected graph. Lexicographic order.
std::vector<EdgeCut> enumerate_small_cuts(const Multigraph& g, int k);

}  // namespace normalcol
