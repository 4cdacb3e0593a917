#pragma once
#include <array>
#include <vector>

#include "normalcol/multigraph.hpp"

namespace normalcol {

// True iff no induced K_{1,3} in the underlying simple graph.
bool is_claw_free(const Multigraph& g);

// Induced K4-minus-an-edge: poles are the nonadjacent pair, centers the
// adjacent pair joined to everything.
struct Diamond {
  int pole_u, pole_v;      // pole_u < pole_v
  int center_x, center_y;  // center_x < center_y
  std::array<int, 4> vertices() const { return {pole_u, pole_v, center_x, center_y}; }
};

struct TrianglesAndDiamonds {
  std::vector<std::array<int, 3>> triangles;  // each sorted; lexicographic list
  std::vector<Diamond> diamonds;              // ordered by sorted vertex set
};

// Triangles whose three edges all have multiplicity one, plus induced diamonds.
// Requires a cubic graph.
TrianglesAndDiamonds find_triangles_and_diamonds(const Multigraph& g);

}  // namespace normalcol
