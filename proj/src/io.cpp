#include "normalcol/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace normalcol {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("parse: bad integer for ") + what +
                                ": '" + s + "'");
  }
}

std::vector<int> to_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  for (const std::string& part : split(s, ',')) out.push_back(to_int(part, what));
  return out;
}

// "key=value" tokens after a fixed prefix.
std::string find_kv(const std::vector<std::string>& tokens, const std::string& key) {
  for (const std::string& t : tokens) {
    if (t.size() > key.size() + 1 && t.compare(0, key.size(), key) == 0 &&
        t[key.size()] == '=')
      return t.substr(key.size() + 1);
  }
  throw std::invalid_argument("parse: spec comment missing " + key + "=");
}

CyclePermSpec parse_cycle_perm_comment(const std::vector<std::string>& tokens) {
  CyclePermSpec spec;
  spec.n = to_int(find_kv(tokens, "n"), "spec n");
  spec.p = to_int_list(find_kv(tokens, "perm"), "spec perm");
  return spec;
}

HalinSpec parse_treelike_comment(const std::vector<std::string>& tokens) {
  HalinSpec spec;
  std::vector<std::pair<int, int>> tree_edges;
  int max_v = -1;
  for (const std::string& part : split(find_kv(tokens, "tree"), ',')) {
    std::vector<std::string> uv = split(part, '-');
    if (uv.size() != 2) throw std::invalid_argument("parse: bad tree edge '" + part + "'");
    int u = to_int(uv[0], "tree edge"), v = to_int(uv[1], "tree edge");
    tree_edges.emplace_back(u, v);
    max_v = std::max({max_v, u, v});
  }
  for (int i = 0; i <= max_v; ++i) spec.tree.add_vertex();
  for (auto [u, v] : tree_edges) spec.tree.add_edge(u, v);
  spec.leaf_order = to_int_list(find_kv(tokens, "leaves"), "spec leaves");
  return spec;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  ParsedGraph out;
  std::string line;
  int n = -1, m = -1, seen = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag[0] == '#') {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      out.comments.push_back(rest);
      std::vector<std::string> tokens = split(rest, ' ');
      if (tokens.size() >= 2 && tokens[0] == "spec") {
        if (tokens[1] == "cycle-perm") out.cycle_perm = parse_cycle_perm_comment(tokens);
        if (tokens[1] == "treelike") out.treelike = parse_treelike_comment(tokens);
      }
      continue;
    }
    if (tag == "p") {
      std::string fmt;
      if (n >= 0) throw std::invalid_argument("parse: duplicate header");
      if (!(ls >> fmt >> n >> m) || fmt != "cub" || n < 0 || m < 0)
        throw std::invalid_argument("parse: bad header, expected 'p cub <n> <m>'");
      for (int i = 0; i < n; ++i) out.graph.add_vertex();
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw std::invalid_argument("parse: edge before header");
      int u, v;
      if (!(ls >> u >> v)) throw std::invalid_argument("parse: bad edge line '" + line + "'");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("parse: edge endpoint out of range in '" + line + "'");
      out.graph.add_edge(u, v);
      ++seen;
      continue;
    }
    throw std::invalid_argument("parse: unknown line '" + line + "'");
  }
  if (n < 0) throw std::invalid_argument("parse: missing header");
  if (seen != m)
    throw std::invalid_argument("parse: header promises " + std::to_string(m) +
                                " edges, found " + std::to_string(seen));
  return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("parse: cannot open '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const Multigraph& g, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << "p cub " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int e = 0; e < g.edge_count(); ++e)
    os << "e " << g.edge(e).u << " " << g.edge(e).v << "\n";
  return os.str();
}

EdgeColoring parse_coloring(std::istream& in, int edge_count) {
  EdgeColoring c;
  c.assignment.assign(edge_count, 0);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag[0] == '#') continue;
    if (tag != "c") throw std::invalid_argument("parse: unknown coloring line '" + line + "'");
    int e, col;
    if (!(ls >> e >> col)) throw std::invalid_argument("parse: bad coloring line '" + line + "'");
    if (e < 0 || e >= edge_count)
      throw std::invalid_argument("parse: edge index out of range in '" + line + "'");
    if (col < 1) throw std::invalid_argument("parse: colors are positive in '" + line + "'");
    if (c.assignment[e] != 0)
      throw std::invalid_argument("parse: edge " + std::to_string(e) + " colored twice");
    c.assignment[e] = col;
    c.k = std::max(c.k, col);
  }
  for (int e = 0; e < edge_count; ++e)
    if (c.assignment[e] == 0)
      throw std::invalid_argument("parse: coloring misses edge " + std::to_string(e));
  return c;
}

EdgeColoring parse_coloring_file(const std::string& path, int edge_count) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("parse: cannot open '" + path + "'");
  return parse_coloring(in, edge_count);
}

std::string serialize_coloring(const EdgeColoring& c, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const std::string& cm : comments) os << "# " << cm << "\n";
  for (size_t e = 0; e < c.assignment.size(); ++e)
    os << "c " << e << " " << c.assignment[e] << "\n";
  return os.str();
}

std::string report_json(const Multigraph& g, const EdgeColoring& c,
                        const NormalityReport& rep, const std::string& method) {
  nlohmann::json j;
  j["proper"] = rep.proper;
  j["poor"] = rep.poor;
  j["rich"] = rep.rich;
  j["neither"] = rep.neither;
  j["normal_fraction"] = rep.normal_fraction.str();
  j["k"] = c.k;
  j["method"] = method;
  nlohmann::json per_edge = nlohmann::json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    nlohmann::json je;
    je["edge"] = e;
    je["u"] = g.edge(e).u;
    je["v"] = g.edge(e).v;
    je["color"] = c.assignment[e];
    je["class"] = edge_class_name(rep.classes[e]);
    per_edge.push_back(je);
  }
  j["per_edge"] = per_edge;
  return j.dump(2);
}

std::string to_dot(const Multigraph& g, const EdgeColoring* coloring,
                   const std::vector<std::string>& vertex_labels) {
  static const char* kPalette[7] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf"};
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, fontsize=10];\n";
  for (size_t v = 0; v < vertex_labels.size(); ++v)
    os << "  " << v << " [label=\"" << vertex_labels[v] << "\"];\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    os << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (coloring) {
      int col = coloring->assignment[e];
      os << " [label=\"" << col << "\"";
      if (col >= 1 && col <= 7) os << ", color=\"" << kPalette[col - 1] << "\"";
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string encode_cycle_perm_comment(const CyclePermSpec& spec) {
  std::ostringstream os;
  os << "spec cycle-perm n=" << spec.n << " perm=";
  for (size_t i = 0; i < spec.p.size(); ++i) os << (i ? "," : "") << spec.p[i];
  return os.str();
}

std::string encode_treelike_comment(const HalinSpec& spec) {
  std::ostringstream os;
  os << "spec treelike tree=";
  for (int e = 0; e < spec.tree.edge_count(); ++e)
    os << (e ? "," : "") << spec.tree.edge(e).u << "-" << spec.tree.edge(e).v;
  os << " leaves=";
  for (size_t i = 0; i < spec.leaf_order.size(); ++i)
    os << (i ? "," : "") << spec.leaf_order[i];
  return os.str();
}

}  // namespace normalcol
