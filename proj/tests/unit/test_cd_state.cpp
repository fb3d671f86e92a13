#include <gtest/gtest.h>

#include <random>

#include <boxworld/cd_state.hpp>
#include <boxworld/error.hpp>

#include "oracles/oracles.hpp"

using namespace boxworld;

namespace {

// p(a) fixed, then Eve's conditional behavior drawn independently per (z, a).
CdState random_cd(std::mt19937_64& rng, std::size_t nz, std::size_t na, std::size_t ne) {
  const auto pa = oracle::random_simplex(rng, na);
  std::vector<double> t;
  for (std::size_t z = 0; z < nz; ++z)
    for (std::size_t a = 0; a < na; ++a)
      for (double v : oracle::random_simplex(rng, ne)) t.push_back(pa[a] * v);
  return CdState(nz, na, ne, t);
}

CdState biased_key(double q) { return CdState(1, 4, 1, {q, 0, 0, 1 - q}); }

}  // namespace

TEST(CdState, RejectsSignalingToTheClassicalPart) {
  EXPECT_THROW(CdState(2, 2, 1, {0.5, 0.5, 0.6, 0.4}), InvalidBehavior);
  EXPECT_THROW(CdState(1, 2, 1, {0.5, 0.4}), InvalidBehavior);
  EXPECT_THROW(CdState(1, 2, 2, {0.5, 0.5}), ShapeError);
  EXPECT_NO_THROW(CdState(2, 2, 2, {0.25, 0.25, 0.5, 0, 0.5, 0, 0, 0.5}));
}

TEST(CdState, IdealKeepsEveAndCorrelatesTheKey) {
  CdState s(2, 4, 2, {0.1, 0.2, 0.0, 0.1, 0.1, 0.1, 0.2, 0.2, 0.3, 0.0, 0.1, 0.0, 0.2, 0.0, 0.0, 0.4});
  auto ideal = s.ideal(2);
  EXPECT_EQ(ideal.classical_marginal(), (std::vector<double>{0.5, 0, 0, 0.5}));
  for (std::size_t z = 0; z < 2; ++z) {
    const auto a = s.eve_marginal(z), b = ideal.eve_marginal(z);
    for (std::size_t e = 0; e < 2; ++e) EXPECT_NEAR(a[e], b[e], 1e-15);
  }
  EXPECT_THROW(s.ideal(3), ShapeError);
}

TEST(NsNorm, BiasedKeyDistanceFromIdeal) {
  for (double q : {0.5, 0.6, 0.9, 1.0}) {
    const auto s = biased_key(q);
    const auto ideal = s.ideal(2);
    EXPECT_NEAR(ns_norm_cd(s, ideal), std::abs(q - 0.5), 1e-15);
    EXPECT_EQ(ns_norm_cd(s, ideal), oracle::ns_norm_enumerate(1, 4, 1, s.table(), ideal.table()));
  }
}

TEST(NsNorm, SupremumIsTakenPerClassicalOutcome) {
  // For a = 0 the states differ only under z = 0, for a = 1 only under z = 1;
  // a single global z would see half of the difference.
  CdState p(2, 2, 2, {0.5, 0.0, 0.25, 0.25, 0.25, 0.25, 0.5, 0.0});
  CdState q(2, 2, 2, {0.0, 0.5, 0.25, 0.25, 0.25, 0.25, 0.0, 0.5});
  EXPECT_DOUBLE_EQ(ns_norm_cd(p, q), 1.0);
  EXPECT_EQ(ns_norm_cd(p, q), oracle::ns_norm_enumerate(2, 2, 2, p.table(), q.table()));
}

TEST(NsNormProperty, MetricAxiomsOnRandomCorpus) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t nz = 1 + rng() % 3, na = 1 + rng() % 4, ne = 1 + rng() % 3;
    auto p = random_cd(rng, nz, na, ne), q = random_cd(rng, nz, na, ne), r = random_cd(rng, nz, na, ne);
    EXPECT_EQ(ns_norm_cd(p, p), 0.0);
    EXPECT_EQ(ns_norm_cd(p, q), ns_norm_cd(q, p));
    EXPECT_GE(ns_norm_cd(p, q), 0.0);
    EXPECT_LE(ns_norm_cd(p, q), 1.0 + 1e-12);
    EXPECT_LE(ns_norm_cd(p, r), ns_norm_cd(p, q) + ns_norm_cd(q, r) + 1e-12);
    EXPECT_NEAR(ns_norm_cd(p, q), oracle::ns_norm_enumerate(nz, na, ne, p.table(), q.table()), 1e-15);
  }
}

TEST(NsNormProperty, TrivialEveCollapsesToTotalVariation) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t na = 1 + rng() % 6;
    const auto a = oracle::random_simplex(rng, na), b = oracle::random_simplex(rng, na);
    EXPECT_EQ(ns_norm_cd(CdState(1, na, 1, a), CdState(1, na, 1, b)), total_variation(a, b));
  }
}

TEST(NsNormProperty, EveInputsOnlyIncreaseTheDistance) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_cd(rng, 3, 3, 2), q = random_cd(rng, 3, 3, 2);
    EXPECT_GE(ns_norm_cd(p, q) + 1e-15, total_variation(p.classical_marginal(), q.classical_marginal()));
  }
}

TEST(NsNorm, ShapeMismatchThrows) {
  EXPECT_THROW(ns_norm_cd(biased_key(0.5), CdState(1, 2, 1, {0.5, 0.5})), ShapeError);
  const std::vector<double> a{1.0}, b{0.5, 0.5};
  EXPECT_THROW(total_variation(a, b), ShapeError);
}
