#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include <boxworld/behavior.hpp>
#include <boxworld/error.hpp>
#include <boxworld/exact_linalg.hpp>
#include <boxworld/polytope.hpp>

#include "oracles/oracles.hpp"

using namespace boxworld;

namespace {

const Scenario kBell = Scenario::bipartite(2, 2, 2, 2);

const NsPolytope& bell() {
  static const NsPolytope p(kBell);
  return p;
}

bool contains_table(const std::vector<Vertex>& vertices, const std::vector<Rational>& table, VertexTag tag) {
  return std::any_of(vertices.begin(), vertices.end(),
                     [&](const Vertex& v) { return v.behavior.table() == table && v.tag == tag; });
}

}  // namespace

TEST(Dimension, ClosedForm) {
  EXPECT_EQ(ns_dimension(kBell), 8);
  EXPECT_EQ(ns_dimension(Scenario::single(2, 2)), 2);
  for (std::size_t v = 2; v < 6; ++v) EXPECT_EQ(ns_dimension(Scenario::single(1, v)), static_cast<long>(v) - 1);
  EXPECT_EQ(bell().dimension(), 8);
}

TEST(Vertices, BellScenarioHasTheTwentyFourKnownVertices) {
  const auto& v = bell().vertices();
  ASSERT_EQ(v.size(), 24u);
  EXPECT_EQ(std::count_if(v.begin(), v.end(), [](const Vertex& x) { return x.tag == VertexTag::LocalDeterministic; }),
            16);
  for (int m = 0; m < 16; ++m)
    EXPECT_TRUE(contains_table(v, oracle::local_table(m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1),
                               VertexTag::LocalDeterministic));
  for (int m = 0; m < 8; ++m)
    EXPECT_TRUE(contains_table(v, oracle::nonlocal_table(m >> 2 & 1, m >> 1 & 1, m & 1), VertexTag::Nonlocal));
}

TEST(Vertices, SinglePartyBinaryInputsGiveFourBoxes) {
  NsPolytope p(Scenario::single(2, 2));
  const auto& v = p.vertices();
  ASSERT_EQ(v.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(contains_table(v, oracle::single_party_box(k), VertexTag::LocalDeterministic));
}

TEST(Vertices, SingleInputGivesDeterministicPoints) {
  NsPolytope p(Scenario::single(1, 2));
  EXPECT_EQ(p.vertices().size(), 2u);
}

TEST(Vertices, OrderIsCanonical) {
  const auto& v = bell().vertices();
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end(), canonical_vertex_less));
}

TEST(Vertices, AmbientCapRefusesWithoutPartialList) {
  NsPolytope p(Scenario::parse("4:3;4:3"));
  EXPECT_THROW(p.vertices(), TooLarge);
  NsPolytope small(kBell, PolytopeOptions{8, {}});
  EXPECT_THROW(small.vertices(), TooLarge);
}

TEST(VerticesProperty, ExtremeValidAndSpanningTheDimension) {
  for (const char* text : {"2:2;2:2", "2:2", "1:3", "2:3", "3:2", "2/3;2:2", "3,2,2,2", "2,2,3,2", "1:2;1:2;1:2",
                           "2:2;2:2;1:2"}) {
    NsPolytope p(Scenario::parse(text));
    RMatrix points;
    for (const auto& v : p.vertices()) {
      EXPECT_TRUE(validate(v.behavior).ok()) << text;
      EXPECT_TRUE(p.is_vertex(v.behavior)) << text;
      EXPECT_EQ(v.tag == VertexTag::LocalDeterministic, is_deterministic(v.behavior)) << text;
      points.push_back(v.behavior.table());
    }
    EXPECT_EQ(affine_dimension(points), p.dimension()) << text;
    // Deterministic behaviors are always vertices.
    EXPECT_EQ(static_cast<std::size_t>(std::count_if(p.vertices().begin(), p.vertices().end(),
                                                     [](const Vertex& v) { return v.tag == VertexTag::LocalDeterministic; })),
              deterministic_behaviors(p.scenario()).size())
        << text;
  }
}

TEST(Membership, PrIsNonSignalingButNotLocal) {
  EXPECT_TRUE(bell().contains(pr_box()));
  EXPECT_FALSE(bell().local_contains(pr_box()));
  EXPECT_TRUE(bell().local_contains(local_vertex(0, 0, 0, 0)));
  EXPECT_TRUE(bell().is_vertex(pr_box()));
  EXPECT_FALSE(bell().is_vertex(iso(Rational(1, 2))));
}

TEST(Membership, OutOfRangeEntryIsOutside) {
  auto t = uniform(kBell).table();
  t[0] = Rational(11, 10);
  t[1] = Rational(-1, 10);
  EXPECT_FALSE(bell().contains(Behavior(kBell, t)));
  EXPECT_THROW(bell().contains(maximally_mixed_bit()), ShapeError);
}

TEST(Cost, PrIsOneAndLocalVerticesZero) {
  EXPECT_EQ(bell().nonlocality_cost(pr_box()), 1);
  for (int m = 0; m < 16; ++m)
    EXPECT_EQ(bell().nonlocality_cost(local_vertex(m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1)), 0);
}

TEST(Cost, IsotropicThresholdMatchesChshBoundary) {
  // cost(iso(eps)) vanishes exactly where |S| <= 2.
  Rational previous = 2;
  for (int k = 0; k <= 40; ++k) {
    const Rational eps(k, 40);
    const Rational c = bell().nonlocality_cost(iso(eps));
    const Rational s = chsh(iso(eps));
    EXPECT_EQ(c == 0, s <= 2 && s >= -2) << k;
    EXPECT_EQ(bell().local_contains(iso(eps)), c == 0) << k;
    if (k <= 20) {
      EXPECT_LE(c, previous);
      previous = c;
    }
  }
  EXPECT_EQ(bell().nonlocality_cost(iso(0)), 1);
  EXPECT_GT(bell().nonlocality_cost(iso(Rational(1, 4) - Rational(1, 1000))), 0);
  EXPECT_EQ(bell().nonlocality_cost(iso(Rational(1, 4))), 0);
}

TEST(CostProperty, ConvexAlongMixingLines) {
  std::mt19937_64 rng(5);
  const auto& v = bell().vertices();
  auto random_point = [&] {
    std::vector<Rational> w(v.size());
    std::vector<Behavior> members;
    Rational total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      w[i] = static_cast<long>(rng() % 4);
      total += w[i];
      members.push_back(v[i].behavior);
    }
    for (auto& x : w) x /= total;
    return combine(w, members);
  };
  for (int trial = 0; trial < 15; ++trial) {
    auto p = random_point(), q = random_point();
    const Rational lambda(static_cast<long>(rng() % 9), 8);
    const Rational lhs = bell().nonlocality_cost(mix(lambda, p, q));
    EXPECT_LE(lhs, lambda * bell().nonlocality_cost(p) + (1 - lambda) * bell().nonlocality_cost(q));
    EXPECT_EQ(bell().local_contains(p), bell().nonlocality_cost(p) == 0);
  }
}

TEST(ConstraintSystem, ExposesRowCount) {
  EXPECT_EQ(bell().h(), 2 * 16 + 2 * bell().equality_rank());
  auto [a, b] = bell().inequality_system();
  EXPECT_EQ(a.size(), bell().h());
  // Every vertex satisfies A x <= b.
  for (const auto& v : bell().vertices())
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < 16; ++j) s += a[i][j] * v.behavior[j];
      EXPECT_LE(s, b[i]);
    }
}

TEST(ConvexWeights, FindsDecompositionOrNothing) {
  std::vector<Behavior> points{pr_box(), anti_pr_box()};
  auto w = convex_weights(points, iso(Rational(1, 3)));
  ASSERT_TRUE(w);
  EXPECT_EQ((*w)[0], Rational(2, 3));
  EXPECT_FALSE(convex_weights(points, local_vertex(0, 0, 0, 0)));
}

TEST(VertexCache, RoundTripsThroughDirectory) {
  auto dir = std::filesystem::temp_directory_path() / "boxworld_vertex_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  NsPolytope first(Scenario::parse("2/3;2:2"), PolytopeOptions{64, dir.string()});
  const auto fresh = first.vertices();
  EXPECT_FALSE(std::filesystem::is_empty(dir));
  NsPolytope second(Scenario::parse("2/3;2:2"), PolytopeOptions{64, dir.string()});
  const auto& cached = second.vertices();
  ASSERT_EQ(cached.size(), fresh.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    EXPECT_EQ(cached[i].behavior, fresh[i].behavior);
    EXPECT_EQ(cached[i].tag, fresh[i].tag);
  }
  std::filesystem::remove_all(dir);
}
