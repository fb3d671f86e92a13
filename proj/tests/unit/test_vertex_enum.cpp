#include <gtest/gtest.h>

#include <algorithm>

#include <boxworld/error.hpp>
#include <boxworld/vertex_enum.hpp>

using namespace boxworld;

TEST(DoubleDescription, PositiveOrthantRaysAreUnitVectors) {
  std::vector<IVector> rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto cone = extreme_rays(rows, 3);
  ASSERT_EQ(cone.rays.size(), 3u);
  for (const auto& r : cone.rays) EXPECT_EQ(std::count(r.begin(), r.end(), BigInt(1)), 1);
}

TEST(DoubleDescription, SquarePyramidHasFourRays) {
  // Cone over the square [-1,1]^2 at height 1: z >= |x|, z >= |y|.
  std::vector<IVector> rows{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
  auto cone = extreme_rays(rows, 3);
  EXPECT_EQ(cone.rays.size(), 4u);
  for (std::size_t i = 0; i < cone.rays.size(); ++i) EXPECT_EQ(cone.zero_sets[i].count(), 2u);
}

TEST(StandardForm, SimplexVertices) {
  // x >= 0, x1 + x2 + x3 = 1.
  auto v = standard_form_vertices({{1, 1, 1}}, {1}, 3);
  ASSERT_EQ(v.size(), 3u);
  for (const auto& x : v) EXPECT_EQ(x[0] + x[1] + x[2], 1);
}

TEST(StandardForm, CubeHasEightVertices) {
  // x_i + s_i = 1 for three coordinates.
  RMatrix e{{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
  EXPECT_EQ(standard_form_vertices(e, {1, 1, 1}, 6).size(), 8u);
}

TEST(StandardForm, InfeasibleIsEmptyAndUnboundedThrows) {
  EXPECT_TRUE(standard_form_vertices({{1, 1}}, {-1}, 2).empty());
  EXPECT_THROW(standard_form_vertices({{1, -1}}, {0}, 2), Error);
}

TEST(DoubleDescription, RayCapIsEnforced) {
  RMatrix e{{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
  EXPECT_THROW(standard_form_vertices(e, {1, 1, 1}, 6, DdOptions{2}), TooLarge);
}
