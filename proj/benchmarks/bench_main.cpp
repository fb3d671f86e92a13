#include <random>

#include <benchmark/benchmark.h>

#include <boxworld/boxworld.hpp>

using namespace boxworld;

namespace {

// Fresh polytope each iteration so enumeration is measured, not the cache.
void BM_VertexEnumeration(benchmark::State& state) {
  const Scenario sc = Scenario::bipartite(static_cast<std::size_t>(state.range(0)), 2, 2, 2);
  for (auto _ : state) {
    NsPolytope p(sc);
    benchmark::DoNotOptimize(p.vertices().size());
  }
}
BENCHMARK(BM_VertexEnumeration)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MinimalEnsembles(benchmark::State& state) {
  const NsPolytope bell(Scenario::bipartite(2, 2, 2, 2));
  const Behavior target = iso(Rational(state.range(0), 40));
  bell.vertices();
  for (auto _ : state) benchmark::DoNotOptimize(minimal_ensembles(target, bell).size());
}
BENCHMARK(BM_MinimalEnsembles)->Arg(0)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Generation(benchmark::State& state) {
  const auto ce = nsce(maximally_mixed_bit());
  const auto target = tensor(maximally_mixed_bit(), uniform(Scenario::single(3, 4)));
  for (auto _ : state) benchmark::DoNotOptimize(generate_extension(ce, target).feasible);
}
BENCHMARK(BM_Generation)->Unit(benchmark::kMicrosecond);

void BM_IntrinsicInformation(benchmark::State& state) {
  const auto ne = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> p(4 * ne);
  double s = 0;
  for (auto& v : p) s += (v = ex(rng));
  for (auto& v : p) v /= s;
  const TripartiteDistribution dist(2, 2, ne, p);
  for (auto _ : state) benchmark::DoNotOptimize(intrinsic_information(dist).value);
}
BENCHMARK(BM_IntrinsicInformation)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SquashedNonlocalityPoint(benchmark::State& state) {
  const NsPolytope bell(Scenario::bipartite(2, 2, 2, 2));
  const Behavior device = nsce(iso(Rational(state.range(0), 40)), bell).extension;
  for (auto _ : state) benchmark::DoNotOptimize(squash(Quantifier::Intrinsic, device).value);
}
BENCHMARK(BM_SquashedNonlocalityPoint)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SquashedCmiLp(benchmark::State& state) {
  const NsPolytope bell(Scenario::bipartite(2, 2, 2, 2));
  const Behavior b = iso(Rational(1, 10));
  bell.vertices();
  for (auto _ : state) benchmark::DoNotOptimize(squash_cmi_lp(b, bell).value);
}
BENCHMARK(BM_SquashedCmiLp)->Unit(benchmark::kMillisecond);

void BM_OmegaPpt(benchmark::State& state) {
  const auto omega = build_omega(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_ppt(omega));
}
BENCHMARK(BM_OmegaPpt)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
