#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "gr/graph.hpp"
#include "gr/rational.hpp"

namespace gr {

/// Finitely supported nonnegative rational function on the vertices of a
/// window. Every support vertex must be interior, so each gradient term of
/// the infinite graph is visible in the window.
class LatticeFunction {
 public:
  explicit LatticeFunction(Graph g);
  LatticeFunction(Graph g, std::span<const std::pair<VertexId, Rational>> values);

  static LatticeFunction from_coords(Graph g, std::span<const std::pair<Coord, Rational>> values);

  const Graph& graph() const { return graph_; }
  const Rational& value(VertexId v) const;
  const Rational& operator()(VertexId v) const { return value(v); }
  /// Vertices with a positive value, increasing id.
  const std::vector<VertexId>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  Rational max() const;
  /// f / max(f); the zero function is returned unchanged.
  LatticeFunction normalized() const;
  LatticeFunction scaled(const Rational& factor) const;

  friend bool operator==(const LatticeFunction& a, const LatticeFunction& b) {
    return a.graph_ == b.graph_ && a.values_ == b.values_;
  }

 private:
  Graph graph_;
  std::vector<Rational> values_;
  std::vector<VertexId> support_;
};

/// CSV "x,y,value" (lattice families) or "vertex,value" (trees). Values are
/// written as exact "n/d" rationals; reading accepts fractions or decimals.
void write_function(std::ostream& out, const LatticeFunction& f);
LatticeFunction read_function(std::istream& in, const Graph& g);

}  // namespace gr
