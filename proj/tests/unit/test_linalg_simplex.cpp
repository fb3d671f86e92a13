#include <gtest/gtest.h>

#include <random>

#include <boxworld/error.hpp>
#include <boxworld/exact_linalg.hpp>
#include <boxworld/simplex.hpp>

using namespace boxworld;

namespace {

RMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  RMatrix a(m, RVector(n));
  for (auto& row : a)
    for (auto& v : row) v = d(rng);
  return a;
}

RVector times(const RMatrix& a, const RVector& x) {
  RVector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace

TEST(ExactLinalg, RankPlusNullityIsColumnCount) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + rng() % 6, n = 1 + rng() % 7;
    auto a = random_matrix(rng, m, n);
    auto ns = nullspace(a, n);
    EXPECT_EQ(rank(a, n) + ns.size(), n);
    for (const auto& v : ns) EXPECT_EQ(times(a, v), RVector(m));
  }
}

TEST(ExactLinalg, InverseAndParticularSolution) {
  RMatrix a{{2, 1}, {1, 1}};
  auto inv = inverse(a);
  EXPECT_EQ(inv, (RMatrix{{1, -1}, {-1, 2}}));
  auto x = solve_particular(a, {3, 2}, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RVector{1, 1}));
  EXPECT_FALSE(solve_particular(RMatrix{{1, 1}, {1, 1}}, {1, 2}, 2));
  EXPECT_THROW(inverse(RMatrix{{1, 2}, {2, 4}}), Error);
}

TEST(ExactLinalg, AffineDimension) {
  EXPECT_EQ(affine_dimension({}), -1);
  EXPECT_EQ(affine_dimension({{1, 1}}), 0);
  EXPECT_EQ(affine_dimension({{0, 0}, {1, 1}, {2, 2}}), 1);
  EXPECT_EQ(affine_dimension({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}), 2);
}

TEST(Simplex, SolvesSmallOptimum) {
  // min -x1 - x2 with x1 + 2 x2 + s1 = 4, 3 x1 + x2 + s2 = 6.
  LinearProgram lp{{{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {-1, -1, 0, 0}, 4};
  auto r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.objective, Rational(-14, 5));
  EXPECT_EQ(times(lp.a, r.x), lp.b);
}

TEST(Simplex, DetectsUnboundedness) {
  LinearProgram lp{{{1, -1}}, {1}, {-1, 0}, 2};
  EXPECT_EQ(solve_lp(lp).status, LpStatus::Unbounded);
}

TEST(Simplex, InfeasibleComesWithVerifiedFarkasCertificate) {
  LinearProgram lp{{{1, 1}, {1, 1}}, {1, 2}, {}, 2};
  auto r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::Infeasible);
  EXPECT_TRUE(verify_farkas(lp, r.farkas));
  EXPECT_FALSE(verify_farkas(lp, RVector{0, 0}));
}

TEST(SimplexProperty, FeasibleByConstructionOrCertifiedInfeasible) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 2 + rng() % 5;
    auto a = random_matrix(rng, m, n);
    RVector b;
    const bool planted = trial % 2 == 0;
    if (planted) {
      RVector x(n);
      for (auto& v : x) v = static_cast<long>(rng() % 4);
      b = times(a, x);
    } else {
      b = random_matrix(rng, 1, m)[0];
    }
    LinearProgram lp{a, b, random_matrix(rng, 1, n)[0], n};
    // Bounded objective: add sum x <= 100 via a slack column.
    for (auto& row : lp.a) row.push_back(0);
    lp.a.push_back(RVector(n + 1, Rational(1)));
    lp.b.push_back(100);
    lp.c.push_back(0);
    lp.variables = n + 1;
    auto r = solve_lp(lp);
    if (planted) ASSERT_EQ(r.status, LpStatus::Optimal);
    if (r.status == LpStatus::Optimal) {
      EXPECT_EQ(times(lp.a, r.x), lp.b);
      for (const auto& v : r.x) EXPECT_GE(v, 0);
    } else {
      ASSERT_EQ(r.status, LpStatus::Infeasible);
      EXPECT_TRUE(verify_farkas(lp, r.farkas));
    }
  }
}
