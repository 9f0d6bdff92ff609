#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "error_code.hpp"
#include "gr/isoperimetry.hpp"

namespace gr {
namespace {

using testing::code_of;

std::vector<Coord> coords_of(const OracleResult& r) {
  std::vector<Coord> out;
  for (VertexId v : r.witness) out.push_back(*r.box.coord(v));
  return out;
}

TEST(GridOracle, VertexProfileMatchesBruteForce) {
  const auto oracle = oracle_profile(FamilyKey::grid(), BoundaryKind::Vertex, 6);
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(oracle[n - 1].minimum, testing::brute_grid_minimum(BoundaryKind::Vertex, n, 2)) << "N=" << n;
}

TEST(GridOracle, EdgeProfileMatchesBruteForce) {
  const auto oracle = oracle_profile(FamilyKey::grid(), BoundaryKind::Edge, 6);
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(oracle[n - 1].minimum, testing::brute_grid_minimum(BoundaryKind::Edge, n, 2)) << "N=" << n;
}

TEST(GridOracle, VertexProfileSmallValues) {
  const int expected[] = {4, 6, 7, 8, 8, 9};
  const auto oracle = oracle_profile(FamilyKey::grid(), BoundaryKind::Vertex, 6);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle[n - 1].minimum, expected[n - 1]);
    EXPECT_TRUE(oracle[n - 1].exhaustive);
  }
}

TEST(GridOracle, FiveCellEdgeMinimizerIsThePShape) {
  const auto r = min_edge_boundary(FamilyKey::grid(), 5);
  EXPECT_EQ(r.minimum, 10);
  const std::vector<Coord> p_pentomino{{3, 3}, {4, 3}, {4, 4}, {3, 4}, {2, 4}};
  EXPECT_TRUE(congruent(p_pentomino, coords_of(r)));
  EXPECT_EQ(testing::grid_edge_boundary(coords_of(r)), 10);
}

TEST(GridOracle, WitnessesAttainTheMinimum) {
  for (const auto& r : oracle_profile(FamilyKey::grid(), BoundaryKind::Vertex, 7)) {
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.n);
    EXPECT_EQ(testing::grid_vertex_boundary(coords_of(r)), r.minimum);
  }
}

TEST(GridOracle, EdgeProfileUpToEightMatchesClosedForm) {
  const auto oracle = oracle_profile(FamilyKey::grid(), BoundaryKind::Edge, kOracleMaxN);
  for (const auto& r : oracle) EXPECT_EQ(r.minimum, closed_form_profile(FamilyKey::grid(), BoundaryKind::Edge, r.n));
}

TEST(GridOracle, SmallBoxIsWitnessCertifiedOrRejected) {
  // Side 7 holds every 3-cell shape for the edge boundary. Side 9 clips some
  // 3-cell vertex-boundary clusters, yet the minimizer sits clear of the border.
  const auto edge = oracle_profile(FamilyKey::grid(), BoundaryKind::Edge, 3, 7);
  EXPECT_TRUE(edge.back().exhaustive);
  const auto vertex = oracle_profile(FamilyKey::grid(), BoundaryKind::Vertex, 3, 9);
  EXPECT_FALSE(vertex.back().exhaustive);
  EXPECT_EQ(vertex.back().minimum, 7);
  EXPECT_EQ(code_of([] { oracle_profile(FamilyKey::grid(), BoundaryKind::Edge, 4, 7); }), Errc::BoxTooSmall);
  EXPECT_EQ(code_of([] { oracle_profile(FamilyKey::grid(), BoundaryKind::Vertex, 3, 7); }), Errc::BoxTooSmall);
  EXPECT_EQ(code_of([] { oracle_profile(FamilyKey::grid(), BoundaryKind::Edge, 2, 6); }), Errc::InvalidArgument);
}

TEST(GridOracle, GuardsTheSearchRange) {
  EXPECT_EQ(code_of([] { oracle_profile(FamilyKey::grid(), BoundaryKind::Edge, kOracleMaxN + 1); }),
            Errc::RangeExceeded);
  EXPECT_EQ(code_of([] { oracle_profile(FamilyKey::grid(), BoundaryKind::Edge, 0); }), Errc::InvalidArgument);
}

TEST(TreeOracle, MatchesBruteForceAndClosedForm) {
  for (int d : {3, 4}) {
    const Graph small = Graph::regular_tree(d, 3);
    for (BoundaryKind kind : {BoundaryKind::Edge, BoundaryKind::Vertex}) {
      const auto oracle = oracle_profile(FamilyKey::tree(d), kind, 6);
      for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(oracle[n - 1].minimum, (d - 2) * n + 2);
        EXPECT_EQ(oracle[n - 1].minimum, testing::brute_graph_minimum(small, kind, n));
      }
    }
  }
}

TEST(LadderOracle, MatchesBruteForceAndCaseTable) {
  const Graph small = Graph::ladder(9);
  const auto edge = oracle_profile(FamilyKey::ladder(), BoundaryKind::Edge, 8);
  const auto vertex = oracle_profile(FamilyKey::ladder(), BoundaryKind::Vertex, 8);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(edge[n - 1].minimum, closed_form_profile(FamilyKey::ladder(), BoundaryKind::Edge, n));
    EXPECT_EQ(edge[n - 1].minimum, testing::brute_graph_minimum(small, BoundaryKind::Edge, n));
    EXPECT_EQ(vertex[n - 1].minimum, testing::brute_graph_minimum(small, BoundaryKind::Vertex, n));
    EXPECT_EQ(vertex[n - 1].minimum, 2);
  }
}

TEST(PathOracle, AlwaysTwo) {
  for (BoundaryKind kind : {BoundaryKind::Edge, BoundaryKind::Vertex})
    for (const auto& r : oracle_profile(FamilyKey::path(), kind, 8)) EXPECT_EQ(r.minimum, 2);
}

TEST(ClosedForm, GridEdgeCases) {
  const int expected[] = {4, 6, 8, 8, 10, 10, 12, 12, 12, 14, 14, 14, 16, 16, 16, 16};
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(closed_form_profile(FamilyKey::grid(), BoundaryKind::Edge, n), expected[n - 1]);
}

TEST(ClosedForm, UnsupportedForGridAndLadderVertex) {
  EXPECT_FALSE(has_closed_form(FamilyKey::grid(), BoundaryKind::Vertex));
  EXPECT_EQ(code_of([] { closed_form_profile(FamilyKey::grid(), BoundaryKind::Vertex, 3); }), Errc::Unsupported);
  EXPECT_EQ(code_of([] { closed_form_profile(FamilyKey::ladder(), BoundaryKind::Vertex, 3); }), Errc::Unsupported);
}

TEST(Profile, ProvenanceFollowsTheSource) {
  const auto closed = compute_profile(FamilyKey::tree(3), BoundaryKind::Edge, 5);
  EXPECT_EQ(closed.entry(1).provenance.source, Provenance::Source::ClosedForm);
  EXPECT_FALSE(closed.entry(1).witness.has_value());
  const auto oracle = compute_profile(FamilyKey::grid(), BoundaryKind::Vertex, 4);
  EXPECT_EQ(oracle.entry(4).provenance.source, Provenance::Source::Oracle);
  EXPECT_TRUE(oracle.entry(4).witness.has_value());
  EXPECT_TRUE(oracle.nondecreasing());
  EXPECT_EQ(code_of([&] { (void)oracle.at(5); }), Errc::RangeExceeded);
  EXPECT_EQ(code_of([] { compute_profile(FamilyKey::grid(), BoundaryKind::Vertex, 3, ProfileSource::ClosedFormOnly); }),
            Errc::Unsupported);
}

TEST(Nested, SpiralIsNestedForEdgesOnly) {
  const Ordering spiral = Ordering::spiral(Graph::grid_window(5));
  EXPECT_TRUE(nested_minimizer_check(spiral, BoundaryKind::Edge, 8).all_equal());
  const auto vertex = nested_minimizer_check(spiral, BoundaryKind::Vertex, 6);
  // Prefix {1,2,3} is an L-tromino (7 boundary vertices, optimal); the
  // first excess appears at the 2x2 block plus one cell.
  ASSERT_TRUE(vertex.first_failure.has_value());
  EXPECT_EQ(*vertex.first_failure, 5);
  EXPECT_EQ(vertex.rows[2].prefix_boundary, 7);
  EXPECT_EQ(vertex.rows[4].prefix_boundary, 9);
  EXPECT_EQ(vertex.rows[4].minimum, 8);
}

TEST(Nested, DiamondIsNestedForVertices) {
  const Ordering diamond = Ordering::diamond(Graph::grid_window(5));
  EXPECT_TRUE(nested_minimizer_check(diamond, BoundaryKind::Vertex, 8).all_equal());
}

TEST(Nested, PrefixBoundaryRespectsTheValidPrefix) {
  const Ordering o = Ordering::spiral(Graph::grid_window(2));
  EXPECT_EQ(prefix_boundary(o, BoundaryKind::Edge, 9), 12);
  EXPECT_EQ(code_of([&] { prefix_boundary(o, BoundaryKind::Edge, 10); }), Errc::PrefixTooShort);
}

}  // namespace
}  // namespace gr
