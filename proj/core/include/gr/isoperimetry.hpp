#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gr/graph.hpp"
#include "gr/ordering.hpp"

namespace gr {

enum class BoundaryKind { Edge, Vertex };

std::string_view to_string(BoundaryKind kind);

/// Identifies an infinite graph: the family plus, for trees, the degree.
struct FamilyKey {
  Family family = Family::GridWindow;
  int degree = 0;

  static FamilyKey of(const Graph& g);
  static FamilyKey grid() { return {Family::GridWindow, 0}; }
  static FamilyKey ladder() { return {Family::Ladder, 0}; }
  static FamilyKey path() { return {Family::Path, 0}; }
  static FamilyKey tree(int degree) { return {Family::RegularTree, degree}; }

  std::string describe() const;
  friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
};

/// Largest N the exhaustive oracle accepts.
inline constexpr int kOracleMaxN = 8;

/// Minimal boundary over N-subsets of interior window vertices.
struct OracleResult {
  int n = 0;
  int minimum = 0;
  VertexSet witness;      // lexicographically least minimizer (vertex ids of `box`)
  Graph box = Graph::path(1);
  bool exhaustive = false;  // the window provably holds every candidate shape
  std::uint64_t sets_examined = 0;

  std::string provenance() const;
};

/// Search box size per family: grid = window side (odd), ladder and path =
/// length, tree = depth. Empty selects the smallest exhaustive box.
using BoxSize = std::optional<int>;

/// Exhaustive minima for every N in 1..nmax in one enumeration.
///
/// Sets are enumerated as clusters: connected components of the relation
/// "boundaries may interact" (adjacent for edge boundaries, distance <= 2 for
/// vertex boundaries). Boundaries of separated clusters are disjoint, so a
/// disconnected set is never below the sum of the minima of its parts; this
/// bound is checked for every N. On the grid each cluster is anchored at its
/// row-major least cell; trees, ladders and paths try every root.
std::vector<OracleResult> oracle_profile(FamilyKey family, BoundaryKind kind, int nmax, BoxSize box = {});

OracleResult min_edge_boundary(FamilyKey family, int n, BoxSize box = {});
OracleResult min_vertex_boundary(FamilyKey family, int n, BoxSize box = {});

/// Smallest box for which the oracle is exhaustive.
int exhaustive_box(FamilyKey family, BoundaryKind kind, int n);

bool has_closed_form(FamilyKey family, BoundaryKind kind);

/// Grid edge: with m = floor(sqrt N), 4m if N = m^2, 4m+2 up to m^2+m,
/// 4m+4 below (m+1)^2. Tree (both kinds): (d-2)N + 2. Ladder edge: 2 for
/// N = 1 or even N, 3 for odd N >= 3. Path (both kinds): 2.
/// Errc::Unsupported elsewhere (grid vertex has no closed form).
int closed_form_profile(FamilyKey family, BoundaryKind kind, int n);

struct Provenance {
  enum class Source { Oracle, ClosedForm };
  Source source = Source::Oracle;
  std::string detail;

  std::string to_string() const;
};

struct ProfileEntry {
  int n = 0;
  int value = 0;
  Provenance provenance;
  std::optional<VertexSet> witness;  // oracle entries only
  std::optional<Graph> box;
};

enum class ProfileSource { PreferClosedForm, OracleOnly, ClosedFormOnly };

class IsoperimetricProfile {
 public:
  IsoperimetricProfile(FamilyKey family, BoundaryKind kind, std::vector<ProfileEntry> entries);

  FamilyKey family() const { return family_; }
  BoundaryKind kind() const { return kind_; }
  int nmax() const { return static_cast<int>(entries_.size()); }
  int at(int n) const;
  const ProfileEntry& entry(int n) const;
  const std::vector<ProfileEntry>& entries() const { return entries_; }
  bool nondecreasing() const;

 private:
  FamilyKey family_;
  BoundaryKind kind_;
  std::vector<ProfileEntry> entries_;
};

IsoperimetricProfile compute_profile(FamilyKey family, BoundaryKind kind, int nmax,
                                     ProfileSource source = ProfileSource::PreferClosedForm, BoxSize box = {});

/// #boundary of {v_1..v_n}; n must be within the valid prefix.
int prefix_boundary(const Ordering& o, BoundaryKind kind, std::size_t n);

struct NestedRow {
  int n = 0;
  int prefix_boundary = 0;
  int minimum = 0;
  bool equal = false;
};

struct NestedReport {
  BoundaryKind kind = BoundaryKind::Edge;
  std::vector<NestedRow> rows;
  std::optional<int> first_failure;

  bool all_equal() const { return !first_failure.has_value(); }
};

/// Compares every prefix boundary with the profile minimum for N <= nmax.
NestedReport nested_minimizer_check(const Ordering& o, BoundaryKind kind, int nmax);

}  // namespace gr
