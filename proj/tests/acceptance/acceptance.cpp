// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <boxworld/boxworld.hpp>

#include "oracles/oracles.hpp"

using namespace boxworld;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

int failures = 0;

void run(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) o.require(secs < limit_s, "runtime " + fmt(secs) + " s over " + fmt(limit_s) + " s");
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", name, secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

const NsPolytope& bell() {
  static const NsPolytope p(Scenario::bipartite(2, 2, 2, 2));
  return p;
}

Behavior table_behavior(std::vector<Rational> t) { return Behavior(Scenario::bipartite(2, 2, 2, 2), std::move(t)); }

Outcome polytope_ground_truth() {
  Outcome o;
  NsPolytope p(Scenario::bipartite(2, 2, 2, 2));
  o.require(p.dimension() == 8, "dimension " + std::to_string(p.dimension()));
  const auto& v = p.vertices();
  o.require(v.size() == 24, std::to_string(v.size()) + " vertices");
  std::size_t local = 0, nonlocal = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          const auto t = table_behavior(oracle::local_table(a, b, c, d));
          for (const auto& x : v)
            if (x.behavior == t && x.tag == VertexTag::LocalDeterministic) ++local;
        }
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        const auto b = table_behavior(oracle::nonlocal_table(r, s, t));
        for (const auto& x : v)
          if (x.behavior == b && x.tag == VertexTag::Nonlocal) ++nonlocal;
      }
  o.require(local == 16, std::to_string(local) + " local matches");
  o.require(nonlocal == 8, std::to_string(nonlocal) + " nonlocal matches");
  return o;
}

Outcome nsce_of_uniform_bit() {
  Outcome o;
  const auto base = maximally_mixed_bit();
  const auto ens = minimal_ensembles(base);
  o.require(ens.size() == 2, std::to_string(ens.size()) + " ensembles");
  // {1/2 [a=0], 1/2 [a=1]} and {1/2 [a=x], 1/2 [a=x xor 1]}.
  std::vector<std::vector<Behavior>> expected = {
      {Behavior(Scenario::single(2, 2), oracle::single_party_box(0)),
       Behavior(Scenario::single(2, 2), oracle::single_party_box(1))},
      {Behavior(Scenario::single(2, 2), oracle::single_party_box(2)),
       Behavior(Scenario::single(2, 2), oracle::single_party_box(3))}};
  std::size_t matched = 0;
  for (const auto& want : expected)
    for (const auto& e : ens) {
      if (e.members.size() != 2) continue;
      bool same = true;
      for (const auto& m : e.members)
        same = same && m.weight == Rational(1, 2) &&
               (m.behavior == want[0] || m.behavior == want[1]);
      same = same && e.members[0].behavior != e.members[1].behavior;
      if (same) ++matched;
    }
  o.require(matched == 2, "ensembles differ from the two expected decompositions");
  const auto ce = nsce(base);
  o.require(equal_up_to_relabeling(ce.extension, pr_box(), 1), "extension is not a relabeled PR box");
  return o;
}

Outcome access_generation() {
  Outcome o;
  const auto ce = nsce(maximally_mixed_bit());
  o.require(verify_access(ce), "ACCESS fails on the uniform bit");
  for (int k = 0; k <= 10; ++k)
    o.require(verify_access(nsce(iso(Rational(k, 20)), bell())), "ACCESS fails on iso(" + std::to_string(k) + "/20)");
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto target = oracle::random_uniform_box_extension(rng, 1 + rng() % 3, 1 + rng() % 4);
    const auto r = generate_extension(ce, target);
    if (r.feasible && apply_wiring(ce, r.wiring) == target) ++feasible;
  }
  o.require(feasible == 60, std::to_string(feasible) + "/60 GENERATION targets reproduced");
  return o;
}

Outcome dimension_bound() {
  Outcome o;
  const auto small = nsce_dim_bound(Scenario::single(2, 2));
  const auto big = nsce_dim_bound(Scenario::bipartite(2, 2, 2, 2));
  o.require(small.bound == 1719, "single-party bound " + small.bound.str());
  o.require(big.bound > 0, "Bell-scenario bound not positive");
  const auto ce = nsce(maximally_mixed_bit());
  const long actual = ns_dimension(ce.extension.scenario());
  RMatrix points;
  const NsPolytope ext(ce.extension.scenario());
  for (const auto& v : ext.vertices()) points.push_back(v.behavior.table());
  o.require(affine_dimension(points) == actual && actual >= 8, "constructed dimension " + std::to_string(actual));
  o.require(small.bound >= actual, "bound below the constructed dimension");
  o.detail = "bound " + small.bound.str() + " vs constructed " + std::to_string(actual) + "; Bell bound has " +
             std::to_string(big.bound.str().size()) + " digits" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome squash_endpoints() {
  Outcome o;
  for (int i = 0; i < 16; ++i) {
    const double v = squashed_nonlocality(local_vertex(i >> 3 & 1, i >> 2 & 1, i >> 1 & 1, i & 1)).value;
    o.require(v == 0.0, "local vertex " + std::to_string(i) + " gives " + fmt(v));
  }
  const double pr = squashed_nonlocality(pr_box()).value;
  o.require(std::abs(pr - 1) <= 1e-6, "PR gives " + fmt(pr));
  int threshold = -1, first_zero = -1;
  double prev = INFINITY;
  for (int k = 0; k <= 20; ++k) {
    const auto b = iso(Rational(k, 40));
    if (threshold < 0 && bell().nonlocality_cost(b) == 0) threshold = k;
    const double v = squashed_nonlocality(b).value;
    o.require(v <= prev + 1e-9, "increase at eps=" + std::to_string(k) + "/40");
    if (first_zero < 0 && v == 0.0) first_zero = k;
    prev = v;
  }
  o.require(first_zero >= 0 && first_zero < threshold, "zero at k=" + std::to_string(first_zero) +
                                                           " vs locality threshold k=" + std::to_string(threshold));
  if (o.pass)
    o.detail = "first zero eps=" + std::to_string(first_zero) + "/40, locality threshold eps=" +
               std::to_string(threshold) + "/40";
  return o;
}

Outcome cmi_equals_cost() {
  Outcome o;
  double worst = 0;
  for (int k = 0; k <= 20; ++k) {
    const auto b = iso(Rational(k, 40));
    const double cost = to_double(bell().nonlocality_cost(b));
    const double cmi = squash(Quantifier::ConditionalMutualInformation, nsce(b, bell()).extension).value;
    worst = std::max(worst, std::abs(cmi - cost));
  }
  o.require(worst <= 1e-3, "max deviation " + fmt(worst));
  if (o.pass) o.detail = "max deviation " + fmt(worst);
  return o;
}

Outcome intrinsic_oracle() {
  Outcome o;
  std::mt19937_64 rng(77);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const TripartiteDistribution p(2, 2, 2, oracle::random_simplex(rng, 8));
    const double grid = oracle::intrinsic_grid_2x2x2(p.table(), 128);
    const double got = intrinsic_information(p).value;
    worst = std::max(worst, std::abs(got - grid));
  }
  o.require(worst <= 1e-3, "max |optimizer - grid| " + fmt(worst));
  if (o.pass) o.detail = "max |optimizer - grid| " + fmt(worst);
  return o;
}

Outcome ns_norm_metric() {
  Outcome o;
  std::mt19937_64 rng(88);
  auto random_cd = [&](std::size_t nz, std::size_t na, std::size_t ne) {
    const auto pa = oracle::random_simplex(rng, na);
    std::vector<double> t;
    for (std::size_t z = 0; z < nz; ++z)
      for (std::size_t a = 0; a < na; ++a)
        for (double v : oracle::random_simplex(rng, ne)) t.push_back(pa[a] * v);
    return CdState(nz, na, ne, t);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t nz = 1 + rng() % 3, na = 1 + rng() % 4, ne = 1 + rng() % 3;
    const auto p = random_cd(nz, na, ne), q = random_cd(nz, na, ne), r = random_cd(nz, na, ne);
    o.require(ns_norm_cd(p, p) == 0, "identity of indiscernibles");
    o.require(ns_norm_cd(p, q) == ns_norm_cd(q, p), "symmetry");
    o.require(ns_norm_cd(p, r) <= ns_norm_cd(p, q) + ns_norm_cd(q, r) + 1e-12, "triangle");
    const auto a = oracle::random_simplex(rng, na), b = oracle::random_simplex(rng, na);
    o.require(ns_norm_cd(CdState(1, na, 1, a), CdState(1, na, 1, b)) == total_variation(a, b), "TV collapse");
  }
  return o;
}

Outcome overhead_bounds() {
  Outcome o;
  for (std::size_t delta : {1u, 2u, 5u}) {
    const double m = scheme_memory(2, 4, delta);
    o.require(thm1_overhead(2, 4, 0.0, delta) == 0.5 * delta * std::log2(8.0), "theta=0 overhead");
    (void)m;
  }
  const double ratio = thm3_overhead(2, 2, 1e-6, 1.0).v;
  o.require(std::abs(ratio - 1) <= 0.01, "small-error overhead at eps=1e-6 is " + fmt(ratio) + " M (needs >= 0.99 M)");
  double worst = 0;
  bool monotone = true, finite = true;
  for (std::size_t dk : {2u, 3u, 4u}) {
    const std::size_t ds = 256;
    const auto r = thm5_domain(dk, ds);
    double prev = INFINITY;
    for (int i = 0; i < 100; ++i) {
      const double eps = r.lo + (r.hi - r.lo) * i / 100;
      const auto got = thm5_overhead(dk, ds, eps, 1.0);
      const auto ref = oracle::thm5_reference(static_cast<double>(dk), static_cast<double>(ds), eps, 1.0, 0);
      finite = finite && std::isfinite(got.v) && std::isfinite(got.theta) && std::isfinite(got.eta);
      monotone = monotone && got.v < prev;
      prev = got.v;
      worst = std::max({worst, std::abs(got.v - ref.v), std::abs(got.theta - ref.theta), std::abs(got.eta - ref.eta)});
    }
  }
  o.require(finite, "non-finite general bound");
  o.require(monotone, "general bound not monotone in eps");
  o.require(worst <= 1e-12, "two evaluations differ by " + fmt(worst));
  return o;
}

Outcome mdi() {
  Outcome o;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) {
        const double q = i / 9.0, e1 = j / 9.0, e2 = k / 9.0;
        o.require(mdi_capacity(q, e1, e2) <= repeaterless_bound(e1, e2), "capacity above RB");
      }
  for (int i = 0; i <= 20; ++i) {
    const double eta = i / 20.0;
    o.require(mdi_capacity(1, eta, eta) == eta * eta && repeaterless_bound(eta, eta) == eta, "symmetric values");
    if (eta > 0 && eta < 1) o.require(mdi_capacity(1, eta, eta) < eta, "no strict gap");
  }
  return o;
}

Outcome convexify() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BoundCurve> curves;
    for (int c = 0; c < 3; ++c) {
      BoundCurve curve;
      curve.label = "c" + std::to_string(c);
      for (int i = 0; i <= 25; ++i) {
        const double p = i / 25.0;
        curve.param.push_back(p);
        curve.value.push_back(u(rng) + (p - u(rng)) * (p - u(rng)));
      }
      curves.push_back(curve);
    }
    const auto h = lower_convex_hull(curves);
    for (std::size_t i = 1; i + 1 < h.param.size(); ++i) {
      const double second = (h.value[i + 1] - h.value[i]) / (h.param[i + 1] - h.param[i]) -
                            (h.value[i] - h.value[i - 1]) / (h.param[i] - h.param[i - 1]);
      o.require(second >= -1e-9, "second difference " + fmt(second));
    }
    for (const auto& c : curves)
      for (std::size_t i = 0; i < h.param.size(); ++i)
        o.require(h.value[i] <= c.at(h.param[i]) + 1e-12, "hull above an input");
    const auto again = lower_convex_hull({h});
    for (std::size_t i = 0; i < h.param.size(); ++i)
      o.require(std::abs(again.value[i] - h.value[i]) <= 1e-12, "not idempotent");
  }
  return o;
}

}  // namespace

int main() {
  run(1, "polytope ground truth", 10, polytope_ground_truth);
  run(2, "NSCE of the uniform bit", 1, nsce_of_uniform_bit);
  run(3, "ACCESS and GENERATION", 60, access_generation);
  run(4, "dimension bound", 0, dimension_bound);
  run(5, "squashed nonlocality endpoints", 0, squash_endpoints);
  run(6, "squashed CMI equals cost", 0, cmi_equals_cost);
  run(7, "intrinsic information oracle", 300, intrinsic_oracle);
  run(8, "NS norm", 0, ns_norm_metric);
  run(9, "overhead bounds", 0, overhead_bounds);
  run(10, "MDI capacity", 0, mdi);
  run(11, "convexify", 0, convexify);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
