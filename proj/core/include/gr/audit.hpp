#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gr/isoperimetry.hpp"
#include "gr/lattice_function.hpp"
#include "gr/ordering.hpp"
#include "gr/rational.hpp"
#include "gr/rearrange.hpp"

namespace gr {

/// Per-N record. Fields a given audit does not need stay empty.
struct AuditRow {
  int n = 0;
  std::optional<int> prefix_edge_boundary;
  std::optional<int> edge_minimum;
  std::optional<std::size_t> containment_index;
  std::optional<int> vertex_minimum;
  std::optional<bool> boundary_equality;     // vertex minimum == prefix edge boundary
  std::optional<bool> containment_in_range;  // M(N) <= N + vertex minimum
};

/// Smallest constants with prefix <= beta + alpha * minimum, found two ways:
/// alpha with beta = 0, and beta with alpha = 1.
struct EdgeConstants {
  Rational alpha = 1;
  Rational beta = 0;
};

struct ContainmentConstant {
  int c = 1;
  bool profile_nondecreasing = true;
};

struct FullRangeVerdict {
  bool holds = true;
  std::optional<int> first_failure;
  std::optional<int> first_equality_failure;
  std::optional<int> first_containment_failure;
};

struct AuditReport {
  std::string ordering;
  std::string graph;
  int nmax = 0;
  std::vector<AuditRow> rows;
  std::optional<EdgeConstants> edge_constants;
  std::optional<ContainmentConstant> containment;
  std::optional<FullRangeVerdict> full_range;
  std::vector<std::string> caveats;
};

struct AuditSelection {
  bool edge = false;         // alpha, beta
  bool containment = false;  // c
  bool full_range = false;   // both conditions per N
};

/// Runs the selected audits for N = 1..nmax in one pass. nmax must lie
/// within the valid prefix and the profile range (Errc::PrefixTooShort,
/// Errc::RangeExceeded); a decreasing vertex profile raises
/// Errc::HypothesisFailure when the containment constant is requested.
AuditReport audit(const Ordering& o, int nmax, AuditSelection selection);

AuditReport theorem2_audit(const Ordering& o, int nmax);
AuditReport theorem3_audit(const Ordering& o, int nmax);
AuditReport theorem4_audit(const Ordering& o, int nmax);

struct CounterexampleResult {
  bool center_plus = false;
  std::optional<int> n;  // sweep parameter of the plus-shaped witness
  LatticeFunction witness;
  LatticeFunction rearranged;
  Rational energy;             // ||grad f||_2^2
  Rational rearranged_energy;  // ||grad f*||_2^2
  Rational ratio_squared;
  double ratio = 1.0;
};

inline constexpr int kPlusSweepMax = 64;
inline constexpr double kCounterexampleFactor = 1.01;

/// Finds f with ||grad f*||_2 >= 1.01 ||grad f||_2 for an ordering of a grid
/// window. If rank 1's four neighbors are ranks 2..5 the witness is five ones
/// in a 2x2 block plus one cell; otherwise the plus (n,1,1,1,1) is swept over
/// n = 2..64 and the largest ratio kept. Errc::BoxTooSmall if the first six
/// ranks are not usable, Errc::HypothesisFailure if the ratio stays below
/// 1.01.
CounterexampleResult l2_counterexample(const Ordering& o);

/// Shuffles the cells within l-infinity distance `radius` of the origin, then
/// continues with the remaining window cells in spiral order.
Ordering random_center_ordering(const Graph& g, int radius, std::uint64_t seed);

/// Which rearrangement inequalities an ordering is known to satisfy.
struct RearrangementBounds {
  std::optional<EdgeConstants> l1;  // ||grad f*||_1 <= alpha ||grad f||_1 + beta ||f||_inf
  std::optional<int> linf;          // ||grad f*||_inf <= c ||grad f||_inf
  bool all_p = false;               // ||grad f*||_p <= ||grad f||_p for every p
  bool interpolation = false;       // ||grad f*||_p <= 2^(1-1/p) ||grad f||_1

  /// The established bounds for spiral, snake, lex, path and tree-bfs
  /// orderings; Errc::Unsupported for other names.
  static RearrangementBounds for_ordering(const Ordering& o);
  /// Bounds certified by an audit report (on its N range).
  static RearrangementBounds from_audit(const AuditReport& report);
};

enum class BoundRule { Identity, EdgeConstants, Containment, Interpolation };

std::string_view to_string(BoundRule rule);

struct PolyaSzegoResult {
  PNorm p = PNorm::infinity();
  BoundRule rule = BoundRule::Identity;
  double lhs = 0.0;  // ||grad f*||_p
  double rhs = 0.0;
  bool exact = true;  // decided in rational arithmetic
  bool holds = false;
};

/// Relative slack for comparisons at non-integer p.
inline constexpr double kFractionalTolerance = 1e-12;

/// Picks the sharpest applicable rule for p (Identity, then EdgeConstants at
/// p = 1 or Containment at p = inf, then Interpolation) and compares
/// ||grad f*||_p with it. Errc::Unsupported if no rule covers p.
PolyaSzegoResult polya_szego_check(const LatticeFunction& f, const Ordering& o, const PNorm& p,
                                   const RearrangementBounds& bounds);
PolyaSzegoResult polya_szego_check(const LatticeFunction& f, const Ordering& o, const PNorm& p);

}  // namespace gr
