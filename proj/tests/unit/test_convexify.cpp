#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include <boxworld/convexify.hpp>
#include <boxworld/error.hpp>

using namespace boxworld;

namespace {

BoundCurve sample(const std::function<double(double)>& f, double lo, double hi, int n, std::string label = "c") {
  BoundCurve c;
  c.label = std::move(label);
  for (int i = 0; i <= n; ++i) {
    const double p = lo + (hi - lo) * i / n;
    c.param.push_back(p);
    c.value.push_back(f(p));
  }
  return c;
}

void expect_convex(const BoundCurve& c) {
  for (std::size_t i = 1; i + 1 < c.param.size(); ++i) {
    const double l = c.param[i] - c.param[i - 1], r = c.param[i + 1] - c.param[i];
    const double second = (c.value[i + 1] - c.value[i]) / r - (c.value[i] - c.value[i - 1]) / l;
    EXPECT_GE(second, -1e-9) << i;
  }
}

}  // namespace

TEST(Curve, CheckAndInterpolate) {
  BoundCurve c{{0, 1, 3}, {1, 0, 2}, "v"};
  EXPECT_NO_THROW(c.check());
  EXPECT_DOUBLE_EQ(c.at(0.5), 0.5);
  EXPECT_DOUBLE_EQ(c.at(2), 1.0);
  EXPECT_DOUBLE_EQ(c.at(3), 2.0);
  EXPECT_THROW(c.at(3.5), PreconditionError);
  EXPECT_THROW((BoundCurve{{0, 0}, {1, 1}, ""}).check(), PreconditionError);
  EXPECT_THROW((BoundCurve{{0, 1}, {1}, ""}).check(), ShapeError);
  EXPECT_THROW((BoundCurve{{0, 1}, {1, NAN}, ""}).check(), PreconditionError);
}

TEST(Convexify, ConcaveMinimumBecomesItsChord) {
  auto a = sample([](double p) { return 1 - p; }, 0, 1, 4);
  auto b = sample([](double p) { return 0.5 - 0.25 * p; }, 0, 1, 4);
  auto h = lower_convex_hull({a, b});
  // The minimum bends downwards at p = 2/3, so only the endpoints survive.
  EXPECT_DOUBLE_EQ(h.at(0), 0.5);
  EXPECT_DOUBLE_EQ(h.at(1), 0.0);
  EXPECT_DOUBLE_EQ(h.at(0.5), 0.25);
  EXPECT_DOUBLE_EQ(h.at(0.75), 0.125);
  expect_convex(h);
}

TEST(Convexify, BridgesANonConvexMinimum) {
  // min of two convex bumps is not convex; the hull replaces the middle by a chord.
  auto a = sample([](double p) { return (p - 0.2) * (p - 0.2); }, 0, 1, 50);
  auto b = sample([](double p) { return (p - 0.8) * (p - 0.8); }, 0, 1, 50);
  auto h = lower_convex_hull({a, b});
  EXPECT_NEAR(h.at(0.5), 0.0, 1e-12);
  EXPECT_NEAR(h.at(0.2), 0.0, 1e-12);
  expect_convex(h);
}

TEST(Convexify, CommonDomainOnly) {
  auto a = sample([](double p) { return p; }, 0, 2, 4);
  auto b = sample([](double p) { return 2 - p; }, 1, 3, 4);
  auto h = lower_convex_hull({a, b});
  EXPECT_DOUBLE_EQ(h.param.front(), 1.0);
  EXPECT_DOUBLE_EQ(h.param.back(), 2.0);
  EXPECT_THROW(lower_convex_hull({sample([](double p) { return p; }, 0, 1, 2), sample([](double p) { return p; }, 2, 3, 2)}),
               PreconditionError);
  EXPECT_THROW(lower_convex_hull({}), PreconditionError);
}

TEST(ConvexifyProperty, ConvexBelowInputsAndIdempotent) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BoundCurve> curves;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int c = 0; c < count; ++c) {
      BoundCurve curve;
      double p = 0;
      const int n = 3 + static_cast<int>(rng() % 20);
      for (int i = 0; i < n; ++i) {
        curve.param.push_back(p);
        curve.value.push_back(u(rng) * 3);
        p += 0.01 + u(rng);
      }
      curve.param.back() = std::max(curve.param.back(), 5.0);
      curve.param.front() = 0;
      curves.push_back(curve);
    }
    auto h = lower_convex_hull(curves);
    ASSERT_NO_THROW(h.check());
    expect_convex(h);
    for (const auto& c : curves)
      for (std::size_t i = 0; i < h.param.size(); ++i) EXPECT_LE(h.value[i], c.at(h.param[i]) + 1e-12);
    auto again = lower_convex_hull({h});
    ASSERT_EQ(again.param, h.param);
    for (std::size_t i = 0; i < h.value.size(); ++i) EXPECT_NEAR(again.value[i], h.value[i], 1e-12);
  }
}

TEST(Convexify, ReadsCsvCurves) {
  const auto path = std::filesystem::temp_directory_path() / "boxworld_curve_test.csv";
  {
    std::ofstream out(path);
    out << "# a comment\nparam,value\n0,1\n0.5,0.25\n1,0\n";
  }
  auto c = read_curve_csv(path.string());
  EXPECT_EQ(c.param, (std::vector<double>{0, 0.5, 1}));
  EXPECT_EQ(c.value, (std::vector<double>{1, 0.25, 0}));
  {
    std::ofstream out(path);
    out << "0,1\nbroken\n";
  }
  EXPECT_THROW(read_curve_csv(path.string()), Error);
  std::filesystem::remove(path);
  EXPECT_THROW(read_curve_csv(path.string()), Error);
}
