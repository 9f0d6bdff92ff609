#include <gtest/gtest.h>

#include <cmath>

#include "error_code.hpp"
#include "gr/rearrange.hpp"

namespace gr {
namespace {

using testing::code_of;
using Values = std::vector<std::pair<Coord, Rational>>;

const PNorm kOne = PNorm::finite(1);
const PNorm kTwo = PNorm::finite(2);
const PNorm kInf = PNorm::infinity();

LatticeFunction ladder_fixture(const Graph& ladder) {
  const Values v{{{0, 0}, 2}, {{0, 1}, 1}, {{1, 0}, 1}};
  return LatticeFunction::from_coords(ladder, v);
}

LatticeFunction plus_fixture(const Graph& grid) {
  const Values v{{{0, 0}, 2}, {{0, 1}, 1}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, -1}, 1}};
  return LatticeFunction::from_coords(grid, v);
}

TEST(PNormType, ParseAndClassify) {
  EXPECT_TRUE(PNorm::parse("inf").is_infinite());
  EXPECT_EQ(PNorm::parse("3/2"), PNorm::parse("1.5"));
  EXPECT_EQ(PNorm::parse("2").integer(), 2u);
  EXPECT_FALSE(PNorm::parse("1.5").integer().has_value());
  EXPECT_EQ(PNorm::parse("1.5").to_string(), "3/2");
  EXPECT_EQ(code_of([] { PNorm::parse("0.5"); }), Errc::InvalidArgument);
}

TEST(Rearrange, SortsValuesAlongTheOrdering) {
  const Graph g = Graph::grid_window(3);
  const auto star = rearrange(plus_fixture(g), Ordering::spiral(g));
  EXPECT_EQ(star(g.at({0, 0})), Rational(2));
  for (Coord c : {Coord{1, 0}, Coord{1, 1}, Coord{0, 1}, Coord{-1, 1}}) EXPECT_EQ(star(g.at(c)), Rational(1));
  EXPECT_EQ(star.support().size(), 5u);
}

TEST(Rearrange, PreservesLpNormsOfTheFunction) {
  const Graph g = Graph::grid_window(3);
  const auto f = plus_fixture(g);
  const auto star = rearrange(f, Ordering::diamond(g));
  for (const PNorm& p : {kOne, kTwo, kInf}) EXPECT_EQ(*lp_norm(f, p).exact, *lp_norm(star, p).exact);
}

TEST(Rearrange, IsIdempotent) {
  const Graph g = Graph::ladder(6);
  const Ordering o = Ordering::snake(g);
  const auto once = rearrange(ladder_fixture(g), o);
  EXPECT_EQ(rearrange(once, o), once);
}

TEST(Rearrange, RefusesSupportsLongerThanTheValidPrefix) {
  const Graph g = Graph::grid_window(2);
  Values many;
  for (int y = -1; y <= 1; ++y)
    for (int x = -1; x <= 1; ++x) many.push_back({{x, y}, 1});
  const auto f = LatticeFunction::from_coords(g, many);
  const std::vector<Coord> short_list{{0, 0}, {1, 0}};
  EXPECT_EQ(code_of([&] { rearrange(f, Ordering::from_coords(g, short_list)); }), Errc::PrefixTooShort);
  EXPECT_EQ(code_of([&] { rearrange(f, Ordering::spiral(Graph::grid_window(3))); }), Errc::InvalidArgument);
}

TEST(GradientNorms, LadderSnakeFixture) {
  const Graph g = Graph::ladder(6);
  const auto f = ladder_fixture(g);
  const auto star = rearrange(f, Ordering::snake(g));
  EXPECT_EQ(*grad_lp_norm(f, kOne).exact, Rational(5));
  EXPECT_EQ(*grad_lp_norm(star, kOne).exact, Rational(5));
  EXPECT_EQ(*grad_lp_norm(f, kInf).exact, Rational(1));
  EXPECT_EQ(*grad_lp_norm(star, kInf).exact, Rational(2));
}

TEST(GradientNorms, GridSpiralFixture) {
  const Graph g = Graph::grid_window(3);
  const auto f = plus_fixture(g);
  const auto star = rearrange(f, Ordering::spiral(g));
  EXPECT_EQ(*grad_lp_norm(f, kInf).exact, Rational(1));
  EXPECT_EQ(*grad_lp_norm(star, kInf).exact, Rational(2));
}

TEST(GradientNorms, PlusEnergyFormula) {
  const Graph g = Graph::grid_window(3);
  for (int n = 1; n <= 10; ++n) {
    const Values v{{{0, 0}, n}, {{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}};
    EXPECT_EQ(*grad_power_sum(LatticeFunction::from_coords(g, v), kTwo).exact, Rational(4 * n * n - 8 * n + 16));
  }
}

TEST(GradientNorms, IntegerPowerIsExactFractionalIsClose) {
  const Graph g = Graph::grid_window(3);
  const auto f = plus_fixture(g);
  const NormValue two = grad_lp_norm(f, kTwo);
  ASSERT_TRUE(two.exact.has_value());
  // 4 edges of difference 1 inside, 12 of difference 1 to the outside.
  EXPECT_EQ(*two.exact, Rational(16));
  EXPECT_DOUBLE_EQ(two.value, 4.0);
  const NormValue three_halves = grad_lp_norm(f, PNorm::parse("3/2"));
  EXPECT_FALSE(three_halves.exact.has_value());
  EXPECT_NEAR(three_halves.value, std::pow(16.0, 2.0 / 3.0), 1e-12);
}

TEST(Superlevel, SetsAndErrors) {
  const Graph g = Graph::grid_window(3);
  const auto f = plus_fixture(g);
  EXPECT_EQ(superlevel_set(f, 2).size(), 1u);
  EXPECT_EQ(superlevel_set(f, Rational(1, 2)).size(), 5u);
  EXPECT_EQ(superlevel_set(f, 3).size(), 0u);
  EXPECT_EQ(code_of([&] { superlevel_set(f, 0); }), Errc::InvalidArgument);
}

TEST(Coarea, MatchesL1GradientOnFixtures) {
  const Graph grid = Graph::grid_window(3);
  const Graph ladder = Graph::ladder(6);
  EXPECT_EQ(coarea_l1(plus_fixture(grid)), *grad_lp_norm(plus_fixture(grid), kOne).exact);
  EXPECT_EQ(coarea_l1(ladder_fixture(ladder)), Rational(5));
  EXPECT_EQ(coarea_l1(LatticeFunction(grid)), Rational(0));
}

TEST(ModifiedCoarea, MatchesPowerSumsOfNormalizedFunctions) {
  const Graph g = Graph::grid_window(3);
  const auto f = plus_fixture(g).normalized();
  for (unsigned p = 1; p <= 4; ++p) {
    const PNorm q = PNorm::finite(p);
    EXPECT_EQ(*modified_coarea(f, q).exact, *grad_power_sum(f, q).exact) << "p=" << p;
  }
  const PNorm frac = PNorm::parse("2.5");
  EXPECT_NEAR(modified_coarea(f, frac).value, grad_power_sum(f, frac).value, 1e-12);
}

TEST(ModifiedCoarea, RequiresNormalizationAndFiniteP) {
  const Graph g = Graph::grid_window(3);
  EXPECT_EQ(code_of([&] { modified_coarea(plus_fixture(g), kTwo); }), Errc::NotNormalized);
  EXPECT_EQ(code_of([&] { modified_coarea(plus_fixture(g).normalized(), kInf); }), Errc::InvalidArgument);
}

}  // namespace
}  // namespace gr
