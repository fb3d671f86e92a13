#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include <boxworld/behavior.hpp>
#include <boxworld/ensembles.hpp>
#include <boxworld/polytope.hpp>

#include "oracles/oracles.hpp"

using namespace boxworld;

namespace {

const Scenario kBell = Scenario::bipartite(2, 2, 2, 2);

const NsPolytope& bell() {
  static const NsPolytope p(kBell);
  return p;
}

// The 24 vertices written out from their defining relations.
std::vector<std::vector<Rational>> oracle_vertices() {
  std::vector<std::vector<Rational>> v;
  for (int m = 0; m < 16; ++m) v.push_back(oracle::local_table(m >> 3 & 1, m >> 2 & 1, m >> 1 & 1, m & 1));
  for (int m = 0; m < 8; ++m) v.push_back(oracle::nonlocal_table(m >> 2 & 1, m >> 1 & 1, m & 1));
  return v;
}

std::vector<double> doubles(const std::vector<Rational>& t) {
  std::vector<double> d;
  for (const auto& x : t) d.push_back(to_double(x));
  return d;
}

}  // namespace

TEST(MinimalEnsembles, UniformBitHasExactlyTheTwoPairings) {
  auto ens = minimal_ensembles(maximally_mixed_bit());
  ASSERT_EQ(ens.size(), 2u);
  std::set<std::set<std::vector<Rational>>> got;
  for (const auto& e : ens) {
    std::set<std::vector<Rational>> members;
    for (const auto& m : e.members) {
      EXPECT_EQ(m.weight, Rational(1, 2));
      members.insert(m.behavior.table());
    }
    got.insert(members);
  }
  const std::set<std::set<std::vector<Rational>>> want{
      {oracle::single_party_box(0), oracle::single_party_box(1)},
      {oracle::single_party_box(2), oracle::single_party_box(3)}};
  EXPECT_EQ(got, want);
}

TEST(MinimalEnsembles, VertexIsItsOwnEnsemble) {
  auto ens = minimal_ensembles(pr_box(), bell());
  ASSERT_EQ(ens.size(), 1u);
  ASSERT_EQ(ens[0].members.size(), 1u);
  EXPECT_EQ(ens[0].members[0].weight, 1);
  EXPECT_EQ(ens[0].members[0].behavior, pr_box());
}

TEST(MinimalEnsembles, OrderedBySupport) {
  auto ens = minimal_ensembles(iso(Rational(1, 10)), bell());
  EXPECT_TRUE(std::is_sorted(ens.begin(), ens.end(),
                             [](const Ensemble& a, const Ensemble& b) { return a.support() < b.support(); }));
  for (const auto& e : ens) {
    const auto s = e.support();
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  }
}

// Exhaustive subset scan over the 24 formula vertices, supports of size <= 9.
class IsotropicSubsetOracle : public ::testing::TestWithParam<int> {};

TEST_P(IsotropicSubsetOracle, MatchesExactEnumeration) {
  const Rational eps(GetParam(), 20);
  const auto target = iso(eps);
  const auto vertices = oracle_vertices();
  std::vector<std::vector<double>> vd;
  for (const auto& v : vertices) vd.push_back(doubles(v));
  const auto expected = oracle::subset_ensembles(vd, doubles(target.table()), 9);

  const auto got = minimal_ensembles(target, bell());
  ASSERT_EQ(got.size(), expected.size());

  std::map<std::vector<std::size_t>, std::vector<double>> by_support;
  for (const auto& e : expected) by_support[e.support] = e.weights;
  for (const auto& e : got) {
    std::vector<std::size_t> support;
    std::vector<std::pair<std::size_t, Rational>> weighted;
    for (const auto& m : e.members) {
      auto it = std::find(vertices.begin(), vertices.end(), m.behavior.table());
      ASSERT_NE(it, vertices.end());
      weighted.emplace_back(static_cast<std::size_t>(it - vertices.begin()), m.weight);
    }
    std::sort(weighted.begin(), weighted.end());
    for (const auto& [i, w] : weighted) support.push_back(i);
    auto it = by_support.find(support);
    ASSERT_NE(it, by_support.end());
    for (std::size_t k = 0; k < weighted.size(); ++k) EXPECT_NEAR(to_double(weighted[k].second), it->second[k], 1e-9);
    EXPECT_LE(support.size(), 9u);
  }
}

INSTANTIATE_TEST_SUITE_P(SampledEps, IsotropicSubsetOracle, ::testing::Values(1, 2, 5, 7, 10, 15));

TEST(EnsembleProperty, ExactReconstructionAndSubsetMinimality) {
  for (int k : {0, 1, 3, 5, 10, 20}) {
    const auto target = iso(Rational(k, 20));
    for (const auto& e : minimal_ensembles(target, bell())) {
      EXPECT_TRUE(e.minimal);
      EXPECT_TRUE(reconstructs(e, target));
      EXPECT_EQ(e.mixture(), target);
      EXPECT_TRUE(is_subset_minimal(e, target));
      EXPECT_LE(e.members.size(), static_cast<std::size_t>(bell().dimension() + 1));
    }
  }
}

TEST(EnsembleProperty, NonMinimalDecompositionIsDetected) {
  // iso(1/2) is both the PR/anti-PR midpoint and the average of four product vertices.
  Ensemble e;
  e.members = {{Rational(1, 4), 0, pr_box()},
               {Rational(1, 4), 1, anti_pr_box()},
               {Rational(1, 8), 2, local_vertex(0, 0, 0, 0)},
               {Rational(1, 8), 3, local_vertex(0, 0, 0, 1)},
               {Rational(1, 8), 4, local_vertex(0, 1, 0, 0)},
               {Rational(1, 8), 5, local_vertex(0, 1, 0, 1)}};
  const auto target = iso(Rational(1, 2));
  EXPECT_TRUE(reconstructs(e, target));
  EXPECT_FALSE(is_subset_minimal(e, target));
  Ensemble pair;
  pair.members = {{Rational(1, 2), 0, pr_box()}, {Rational(1, 2), 1, anti_pr_box()}};
  EXPECT_TRUE(is_subset_minimal(pair, target));
  pair.members[0].weight = Rational(1, 3);
  EXPECT_FALSE(reconstructs(pair, target));
}
