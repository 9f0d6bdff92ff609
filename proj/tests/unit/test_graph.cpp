#include <gtest/gtest.h>

#include "gr/error.hpp"
#include "gr/graph.hpp"
#include "error_code.hpp"

namespace gr {
namespace {

using testing::code_of;

TEST(GridWindow, SizeEdgesAndInterior) {
  const Graph g = Graph::grid_window(2);
  EXPECT_EQ(g.vertex_count(), 25u);
  EXPECT_EQ(g.edge_count(), 40u);
  EXPECT_EQ(g.interior_count(), 9u);
  EXPECT_TRUE(g.interior(g.at({1, -1})));
  EXPECT_FALSE(g.interior(g.at({2, 0})));
  EXPECT_EQ(g.degree(g.at({-2, -2})), 2);
  EXPECT_EQ(g.full_degree(g.at({-2, -2})), 4);
}

TEST(GridWindow, IdsAreRowMajor) {
  const Graph g = Graph::grid_window(3);
  for (VertexId v = 1; v < g.vertex_count(); ++v) EXPECT_LT(*g.coord(v - 1), *g.coord(v));
  EXPECT_FALSE(g.find({4, 0}).has_value());
  EXPECT_EQ(code_of([&] { (void)g.at({0, 7}); }), Errc::UnknownVertex);
}

TEST(Ladder, CornerColumnIsInteriorLastColumnIsNot) {
  const Graph g = Graph::ladder(4);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_TRUE(g.interior(g.at({0, 0})));
  EXPECT_EQ(g.full_degree(g.at({0, 1})), 2);
  EXPECT_EQ(g.full_degree(g.at({2, 1})), 3);
  EXPECT_FALSE(g.interior(g.at({3, 0})));
}

TEST(Path, CenteredCoordinates) {
  const Graph g = Graph::path(6);
  EXPECT_EQ(g.coord(0)->x, -2);
  EXPECT_EQ(g.coord(5)->x, 3);
  EXPECT_FALSE(g.interior(0));
  EXPECT_TRUE(g.interior(g.at({0, 0})));
}

TEST(RegularTree, LayerSizesAndDepths) {
  const Graph g = Graph::regular_tree(3, 3);
  EXPECT_EQ(g.vertex_count(), 1u + 3u + 6u + 12u);
  EXPECT_EQ(g.interior_count(), 10u);
  EXPECT_EQ(g.depth(0), 0);
  EXPECT_EQ(g.depth(3), 1);
  EXPECT_EQ(g.depth(4), 2);
  EXPECT_EQ(g.depth(21), 3);
  EXPECT_FALSE(g.has_coords());
  EXPECT_EQ(g.describe(), "tree:3,3");
}

TEST(GraphBuilders, RejectBadParameters) {
  EXPECT_EQ(code_of([] { Graph::grid_window(0); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { Graph::ladder(0); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { Graph::regular_tree(2, 3); }), Errc::InvalidArgument);
}

TEST(GraphEquality, SameParametersCompareEqual) {
  EXPECT_EQ(Graph::grid_window(3), Graph::grid_window(3));
  EXPECT_FALSE(Graph::grid_window(3) == Graph::grid_window(4));
  EXPECT_EQ(Graph::build(Family::Ladder, {.length = 5}), Graph::ladder(5));
}

TEST(Boundaries, SingleCellAndDomino) {
  const Graph g = Graph::grid_window(3);
  const VertexSet one{g.at({0, 0})};
  EXPECT_EQ(edge_boundary(g, one).count, 4u);
  EXPECT_EQ(vertex_boundary(g, one).size(), 4u);
  const VertexSet domino{g.at({0, 0}), g.at({1, 0})};
  EXPECT_EQ(edge_boundary(g, domino).count, 6u);
  EXPECT_EQ(vertex_boundary(g, domino).size(), 6u);
}

TEST(Boundaries, LTrominoHasSevenBoundaryVertices) {
  const Graph g = Graph::grid_window(3);
  const std::vector<Coord> cells{{0, 0}, {1, 0}, {0, 1}};
  const auto a = VertexSet::from_coords(g, cells);
  EXPECT_EQ(vertex_boundary(g, a).size(), 7u);
  EXPECT_EQ(edge_boundary(g, a).count, 8u);
}

TEST(Boundaries, EdgesAreInsideOutsidePairs) {
  const Graph g = Graph::ladder(5);
  const VertexSet a{g.at({0, 0}), g.at({0, 1})};
  const auto b = edge_boundary(g, a);
  ASSERT_EQ(b.count, 2u);
  for (const Edge& e : b.edges) {
    EXPECT_TRUE(a.contains(e.u));
    EXPECT_FALSE(a.contains(e.v));
  }
}

TEST(Boundaries, RejectWindowBorderVertices) {
  const Graph g = Graph::grid_window(2);
  const VertexSet border{g.at({2, 2})};
  EXPECT_EQ(code_of([&] { edge_boundary(g, border); }), Errc::NonInteriorSet);
  EXPECT_EQ(code_of([&] { vertex_boundary(g, VertexSet{999}); }), Errc::UnknownVertex);
}

TEST(Boundaries, TreeSubtreeMatchesDegreeFormula) {
  const Graph g = Graph::regular_tree(4, 3);
  const VertexSet star{0, 1, 2, 3, 4};
  EXPECT_EQ(edge_boundary(g, star).count, static_cast<std::size_t>((4 - 2) * 5 + 2));
  EXPECT_EQ(vertex_boundary(g, star).size(), static_cast<std::size_t>((4 - 2) * 5 + 2));
}

TEST(VertexSetType, SortsAndDeduplicates) {
  const VertexSet s{5, 1, 5, 3};
  EXPECT_EQ(s.members(), (std::vector<VertexId>{1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
}

TEST(Congruence, DetectsRotationsReflectionsAndTranslations) {
  const std::vector<Coord> p{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, -1}};
  const std::vector<Coord> rotated{{5, 5}, {5, 6}, {4, 6}, {4, 5}, {6, 5}};
  const std::vector<Coord> mirrored{{0, 0}, {-1, 0}, {-1, 1}, {0, 1}, {0, -1}};
  const std::vector<Coord> plus{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  EXPECT_TRUE(congruent(p, rotated));
  EXPECT_TRUE(congruent(p, mirrored));
  EXPECT_FALSE(congruent(p, plus));
}

}  // namespace
}  // namespace gr
