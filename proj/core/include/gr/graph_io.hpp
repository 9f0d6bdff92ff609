#pragma once

#include <iosfwd>
#include <string_view>

#include "gr/graph.hpp"

namespace gr {

/// Edge-list text format:
///
///   <family> <params...>          e.g. "grid 3", "ladder 8", "path 7", "tree 3 4"
///   <id> <x> <y> <interior 0|1>   one line per vertex, increasing id
///   <id> <id>                     one line per edge, u < v
///
/// Trees have no lattice embedding; their vertex lines carry depth and the
/// position within that depth layer in place of x and y.
void write_graph(std::ostream& out, const Graph& g);

/// Rebuilds the graph from the header and verifies every vertex and edge
/// line against it; any disagreement is an Errc::Parse error.
Graph read_graph(std::istream& in);

/// "grid:3", "ladder:8", "path:7", "tree:3,4"
Graph parse_graph_spec(std::string_view spec);

}  // namespace gr
