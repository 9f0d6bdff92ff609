#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gr {

using VertexId = std::uint32_t;

/// Integer lattice point. Ordered row-major (y first, then x), which is also
/// the vertex id order of grid windows.
struct Coord {
  int x = 0;
  int y = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
  friend std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

std::string to_string(const Coord& c);

enum class Family { GridWindow, Ladder, Path, RegularTree };

std::string_view to_string(Family family);

/// Parameters of the four families. Only the fields of the active family are
/// meaningful: grid uses half_width, ladder/path use length, tree uses
/// degree + depth.
struct FamilyParams {
  int half_width = 0;
  int length = 0;
  int degree = 0;
  int depth = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite window of one of the infinite graphs Z^2, N x {0,1}, Z and the
/// d-regular tree. A vertex is interior when its whole infinite-graph
/// neighborhood is present in the window.
///
/// Graph is a cheap handle onto immutable shared state: copies share the
/// adjacency, and all queries are const and thread-safe.
class Graph {
 public:
  static Graph grid_window(int half_width);
  static Graph ladder(int length);
  static Graph path(int length);
  static Graph regular_tree(int degree, int depth);
  static Graph build(Family family, const FamilyParams& params);

  Family family() const;
  const FamilyParams& params() const;
  /// e.g. "grid:3", "ladder:8", "path:7", "tree:3,4"
  std::string describe() const;

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  bool contains(VertexId v) const { return v < vertex_count(); }

  std::span<const VertexId> neighbors(VertexId v) const;
  int degree(VertexId v) const;
  /// Degree of the vertex in the infinite graph the window is cut from.
  int full_degree(VertexId v) const;
  bool interior(VertexId v) const;
  std::size_t interior_count() const;

  bool has_coords() const;
  std::optional<Coord> coord(VertexId v) const;
  std::optional<VertexId> find(const Coord& c) const;
  /// Throws Errc::UnknownVertex when the point lies outside the window.
  VertexId at(const Coord& c) const;

  /// Tree only: distance from the root (root = vertex 0). Zero for other families.
  int depth(VertexId v) const;

  /// All edges with u < v, in increasing order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Impl;
  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Sorted, duplicate-free set of vertices of some graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<VertexId> members);

  static VertexSet from_coords(const Graph& g, std::span<const Coord> coords);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<VertexId>& members() const { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

struct EdgeBoundary {
  std::size_t count = 0;
  std::vector<Edge> edges;  // (inside, outside) pairs
};

/// Edges with exactly one endpoint in `a`. Every member of `a` must be an
/// interior vertex, so the count equals the infinite-graph value; other
/// sets are rejected with Errc::NonInteriorSet.
EdgeBoundary edge_boundary(const Graph& g, const VertexSet& a);

/// Vertices outside `a` adjacent to some member of `a`. Same precondition as
/// edge_boundary.
VertexSet vertex_boundary(const Graph& g, const VertexSet& a);

/// Throws unless every member exists and is interior.
void require_interior(const Graph& g, const VertexSet& a);

/// True if b is an image of a under a translation composed with one of the
/// eight symmetries of the square lattice.
bool congruent(std::span<const Coord> a, std::span<const Coord> b);

}  // namespace gr
