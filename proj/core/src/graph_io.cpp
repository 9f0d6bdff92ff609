#include "gr/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gr/error.hpp"

namespace gr {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string str(s);
    int value = std::stoi(str, &used);
    if (used != str.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw Error(Errc::Parse, "bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  }
}

// x/y pair written for a vertex; trees use (depth, slot within layer).
std::pair<int, int> position(const Graph& g, VertexId v, std::vector<VertexId>& layer_start) {
  if (auto c = g.coord(v)) return {c->x, c->y};
  const int d = g.depth(v);
  if (static_cast<int>(layer_start.size()) <= d) layer_start.resize(d + 1, v);
  return {d, static_cast<int>(v - layer_start[d])};
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  const auto& p = g.params();
  out << to_string(g.family());
  switch (g.family()) {
    case Family::GridWindow: out << ' ' << p.half_width; break;
    case Family::Ladder:
    case Family::Path: out << ' ' << p.length; break;
    case Family::RegularTree: out << ' ' << p.degree << ' ' << p.depth; break;
  }
  out << '\n';
  std::vector<VertexId> layer_start;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto [x, y] = position(g, v, layer_start);
    out << v << ' ' << x << ' ' << y << ' ' << (g.interior(v) ? 1 : 0) << '\n';
  }
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::Parse, "missing graph header");
  std::istringstream header(line);
  std::string family;
  header >> family;
  std::vector<std::string> args;
  for (std::string a; header >> a;) args.push_back(a);

  FamilyParams params;
  Family fam{};
  const auto need = [&](std::size_t k) {
    if (args.size() != k) throw Error(Errc::Parse, "header '" + line + "' expects " + std::to_string(k) + " parameters");
  };
  if (family == "grid") {
    need(1);
    fam = Family::GridWindow;
    params.half_width = parse_int(args[0], "half width");
  } else if (family == "ladder") {
    need(1);
    fam = Family::Ladder;
    params.length = parse_int(args[0], "length");
  } else if (family == "path") {
    need(1);
    fam = Family::Path;
    params.length = parse_int(args[0], "length");
  } else if (family == "tree") {
    need(2);
    fam = Family::RegularTree;
    params.degree = parse_int(args[0], "degree");
    params.depth = parse_int(args[1], "depth");
  } else {
    throw Error(Errc::Parse, "unknown family '" + family + "'");
  }
  Graph g = Graph::build(fam, params);

  std::vector<VertexId> layer_start;
  std::size_t vertices_seen = 0;
  std::vector<Edge> edges;
  const std::vector<Edge> expected_edges = g.edges();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (tok.size() == 4) {
      if (!edges.empty()) throw Error(Errc::Parse, where + ": vertex line after edge lines");
      const int id = parse_int(tok[0], "vertex id");
      if (id != static_cast<int>(vertices_seen) || vertices_seen >= g.vertex_count())
        throw Error(Errc::Parse, where + ": unexpected vertex id " + tok[0]);
      auto [x, y] = position(g, static_cast<VertexId>(id), layer_start);
      const int interior = parse_int(tok[3], "interior flag");
      if (parse_int(tok[1], "x") != x || parse_int(tok[2], "y") != y || interior != (g.interior(id) ? 1 : 0))
        throw Error(Errc::Parse, where + ": vertex " + tok[0] + " disagrees with " + g.describe());
      ++vertices_seen;
    } else if (tok.size() == 2) {
      const int u = parse_int(tok[0], "edge endpoint");
      const int v = parse_int(tok[1], "edge endpoint");
      if (u < 0 || v < 0) throw Error(Errc::Parse, where + ": negative vertex id");
      edges.push_back({static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))});
    } else {
      throw Error(Errc::Parse, where + ": expected 'id x y interior' or 'id id'");
    }
  }
  if (vertices_seen != g.vertex_count())
    throw Error(Errc::Parse, "expected " + std::to_string(g.vertex_count()) + " vertex lines, got " +
                                 std::to_string(vertices_seen));
  std::sort(edges.begin(), edges.end());
  if (edges != expected_edges) throw Error(Errc::Parse, "edge list disagrees with " + g.describe());
  return g;
}

Graph parse_graph_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::Parse, "graph spec '" + std::string(spec) + "' needs family:params");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (family == "grid") return Graph::grid_window(parse_int(rest, "grid half width"));
  if (family == "ladder") return Graph::ladder(parse_int(rest, "ladder length"));
  if (family == "path") return Graph::path(parse_int(rest, "path length"));
  if (family == "tree") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw Error(Errc::Parse, "tree spec needs tree:d,h");
    return Graph::regular_tree(parse_int(rest.substr(0, comma), "tree degree"),
                               parse_int(rest.substr(comma + 1), "tree depth"));
  }
  throw Error(Errc::Parse, "unknown family '" + std::string(family) + "'");
}

}  // namespace gr
