#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gr/graph.hpp"

namespace gr {

/// A finite prefix v_1, v_2, ... of a vertex permutation of the infinite
/// graph, realized on a window. Ranks are 1-based.
///
/// Two lengths bound what the window can say about the infinite ordering:
///  - faithful_len: ranks 1..faithful_len coincide with the infinite
///    ordering (a window can truncate e.g. an l1 sphere of the diamond);
///  - valid_prefix_len: the largest N such that v_1..v_N are interior and
///    faithful and each of their neighbors carries a faithful rank. Norms,
///    boundaries and containment indices of such prefixes are exact.
class Ordering {
 public:
  /// Counterclockwise spiral around the origin, first step to (1,0).
  static Ordering spiral(const Graph& g);
  /// Nested l1 balls around the origin.
  static Ordering diamond(const Graph& g);
  static Ordering snake(const Graph& g);
  static Ordering lexicographic(const Graph& g);
  /// Offsets 0, -1, +1, -2, +2, ... from the center of a path.
  static Ordering path(const Graph& g);
  static Ordering tree_bfs(const Graph& g);
  /// Ranks as listed. The list may cover only part of the window; the whole
  /// list is taken to be faithful.
  static Ordering from_list(const Graph& g, std::span<const VertexId> vertices, std::string name = "list");
  static Ordering from_coords(const Graph& g, std::span<const Coord> coords, std::string name = "list");

  /// "spiral", "diamond", "snake", "lex", "path", "tree-bfs" or a list name.
  static Ordering by_name(const Graph& g, std::string_view name);

  const Graph& graph() const { return graph_; }
  const std::string& name() const { return name_; }

  std::size_t size() const { return ranks_.size(); }
  /// Vertex at 1-based rank k.
  VertexId vertex(std::size_t rank) const;
  std::optional<std::size_t> rank_of(VertexId v) const;
  /// {v_1, ..., v_n}
  VertexSet prefix(std::size_t n) const;
  std::span<const VertexId> ranked() const { return ranks_; }

  std::size_t faithful_len() const { return faithful_len_; }
  std::size_t valid_prefix_len() const { return valid_prefix_len_; }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.graph_ == b.graph_ && a.ranks_ == b.ranks_;
  }

 private:
  Ordering(Graph g, std::vector<VertexId> ranks, std::size_t faithful_len, std::string name);

  Graph graph_;
  std::vector<VertexId> ranks_;
  std::vector<std::size_t> rank_of_;  // 0 = unranked
  std::size_t faithful_len_ = 0;
  std::size_t valid_prefix_len_ = 0;
  std::string name_;
};

/// Smallest M with the vertex boundary of {v_1..v_N} inside {v_1..v_M}.
/// Requires 1 <= N <= valid_prefix_len; throws Errc::UnrankedNeighbor if a
/// neighbor has no faithful rank (the window is too small).
std::size_t containment_index(const Ordering& o, std::size_t n);

}  // namespace gr
