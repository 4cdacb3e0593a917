#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normalcol/coloring.hpp"
#include "normalcol/generators.hpp"
#include "normalcol/multigraph.hpp"

namespace normalcol {

// Text graph format: header "p cub <n> <m>", one "e <u> <v>" line per edge
// (edge index = line order, 0-based vertices, parallel edges repeat lines),
// "#" starts a comment. Structured "# spec ..." comments carry generator
// metadata so `color --method auto` can recover the construction.
struct ParsedGraph {
  Multigraph graph;
  std::vector<std::string> comments;  // comment text, '#' stripped
  std::optional<CyclePermSpec> cycle_perm;
  std::optional<HalinSpec> treelike;
};

ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);
std::string serialize_graph(const Multigraph& g,
                            const std::vector<std::string>& comments = {});

// Coloring format: one "c <edge-index> <color>" line per edge; total over edges.
EdgeColoring parse_coloring(std::istream& in, int edge_count);
EdgeColoring parse_coloring_file(const std::string& path, int edge_count);
std::string serialize_coloring(const EdgeColoring& c,
                               const std::vector<std::string>& comments = {});

// Machine-readable verification report.
std::string report_json(const Multigraph& g, const EdgeColoring& c,
                        const NormalityReport& rep, const std::string& method);

// DOT export; edges carry color attributes when a coloring is given.
std::string to_dot(const Multigraph& g, const EdgeColoring* coloring = nullptr,
                   const std::vector<std::string>& vertex_labels = {});

// Generator-spec comments (round-tripped through graph files).
std::string encode_cycle_perm_comment(const CyclePermSpec& spec);
std::string encode_treelike_comment(const HalinSpec& spec);

}  // namespace normalcol
