#include "boxworld/squash.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "boxworld/error.hpp"
#include "boxworld/nsce.hpp"
#include "boxworld/parallel.hpp"
#include "boxworld/simplex.hpp"

namespace boxworld {

std::string EveStrategy::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < mixture.size(); ++i) {
    if (i) os << '+';
    os << mixture[i].second << "*z" << mixture[i].first;
  }
  os << (channel ? " |F|=" + std::to_string(channel->outputs()) : std::string(" raw"));
  return os.str();
}

std::string to_string(Quantifier q) {
  switch (q) {
    case Quantifier::MutualInformation: return "mi";
    case Quantifier::ConditionalMutualInformation: return "cmi";
    case Quantifier::Intrinsic: return "intrinsic";
  }
  return "intrinsic";
}

Quantifier parse_quantifier(const std::string& name) {
  if (name == "mi") return Quantifier::MutualInformation;
  if (name == "cmi") return Quantifier::ConditionalMutualInformation;
  if (name == "intrinsic") return Quantifier::Intrinsic;
  throw PreconditionError("unknown quantifier '" + name + "' (expected intrinsic, cmi or mi)");
}

TripartiteDistribution measure_device(const Behavior& device, std::size_t x, std::size_t y,
                                      const EveStrategy& strategy) {
  const Scenario& sc = device.scenario();
  if (sc.parties() != 3) throw ShapeError("device must have parties (A, B, E)");
  if (x >= sc.inputs(0) || y >= sc.inputs(1)) throw ShapeError("honest input out of range");
  if (strategy.mixture.empty()) throw ShapeError("Eve strategy has no inputs");
  const std::size_t va = sc.outputs(0, x), vb = sc.outputs(1, y);
  std::size_t raw = 0;
  for (const auto& [z, w] : strategy.mixture) {
    if (z >= sc.inputs(2)) throw ShapeError("Eve input out of range");
    raw += sc.outputs(2, z);
  }
  std::vector<double> p(va * vb * raw, 0.0);
  std::size_t offset = 0;
  for (const auto& [z, w] : strategy.mixture) {
    const std::size_t ne = sc.outputs(2, z);
    const std::vector<std::size_t> xs = {x, y, z};
    const std::size_t block = sc.block_offset(sc.encode_inputs(xs));
    for (std::size_t ab = 0; ab < va * vb; ++ab)
      for (std::size_t e = 0; e < ne; ++e) p[ab * raw + offset + e] = w * to_double(device[block + ab * ne + e]);
    offset += ne;
  }
  std::ostringstream note;
  note << "x=" << x << " y=" << y << " eve=" << strategy.summary();
  TripartiteDistribution dist(va, vb, raw, std::move(p), note.str());
  if (strategy.channel) return apply_channel(dist, *strategy.channel);
  return dist;
}

namespace {

struct Scored {
  double value;
  EveStrategy strategy;
};

std::vector<EveStrategy> mixtures_of(const std::vector<std::size_t>& zs, std::size_t steps) {
  std::vector<EveStrategy> out;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      for (std::size_t k = 1; k < steps; ++k) {
        const double alpha = static_cast<double>(k) / static_cast<double>(steps);
        out.push_back({{{zs[i], alpha}, {zs[j], 1 - alpha}}, std::nullopt});
      }
  return out;
}

std::vector<std::size_t> best_indices(const std::vector<double>& values, std::size_t k) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  idx.resize(std::min(k, idx.size()));
  return idx;
}

/// One honest setting: returns the best Eve strategy found and whether a strict mixture won.
struct InputOutcome {
  Scored best;
  bool mixture_won = false;
};

InputOutcome generic_min(const QuantifierFn& fn, const Behavior& device, std::size_t x, std::size_t y,
                         const SquashConfig& cfg) {
  const std::size_t nz = device.scenario().inputs(2);
  std::vector<double> pure(nz);
  parallel_for(nz, [&](std::size_t z) { pure[z] = fn(measure_device(device, x, y, EveStrategy::pure(z))); });
  const std::size_t zbest = best_indices(pure, 1).front();
  InputOutcome out{{pure[zbest], EveStrategy::pure(zbest)}, false};
  if (!cfg.mixtures || nz < 2) return out;
  const auto mixes = mixtures_of(best_indices(pure, cfg.top_k), cfg.mixture_steps);
  std::vector<double> mv(mixes.size());
  parallel_for(mixes.size(), [&](std::size_t i) { mv[i] = fn(measure_device(device, x, y, mixes[i])); });
  for (std::size_t i = 0; i < mixes.size(); ++i) {
    if (mv[i] < out.best.value - 1e-12) {
      out.best = {mv[i], mixes[i]};
      out.mixture_won = true;
    }
  }
  return out;
}

InputOutcome intrinsic_min(const Behavior& device, std::size_t x, std::size_t y, const SquashConfig& cfg) {
  const std::size_t nz = device.scenario().inputs(2);
  auto full = [&](EveStrategy s) {
    const auto r = intrinsic_information(measure_device(device, x, y, s), cfg.intrinsic);
    s.channel = r.channel;
    return Scored{r.value, std::move(s)};
  };
  auto screen = [&](const EveStrategy& s) {
    return intrinsic_information_screen(measure_device(device, x, y, s));
  };

  std::vector<double> pure(nz);
  std::vector<StochasticChannel> pure_channel(nz, StochasticChannel::identity(1));
  parallel_for(nz, [&](std::size_t z) {
    auto r = screen(EveStrategy::pure(z));
    pure[z] = r.value;
    pure_channel[z] = r.channel;
  });
  const std::size_t zbest = best_indices(pure, 1).front();
  Scored best{pure[zbest], EveStrategy::pure(zbest)};
  best.strategy.channel = pure_channel[zbest];
  if (best.value <= 0) return {best, false};

  for (std::size_t z : best_indices(pure, cfg.refine)) {
    auto s = full(EveStrategy::pure(z));
    if (s.value < best.value) best = std::move(s);
  }
  if (!cfg.mixtures || nz < 2 || best.value <= 0) return {best, false};

  const auto mixes = mixtures_of(best_indices(pure, cfg.top_k), cfg.mixture_steps);
  std::vector<double> mv(mixes.size());
  parallel_for(mixes.size(), [&](std::size_t i) { mv[i] = screen(mixes[i]).value; });
  bool mixture_won = false;
  for (std::size_t i : best_indices(mv, cfg.refine)) {
    auto s = full(mixes[i]);
    if (s.value < best.value - 1e-12) {
      best = std::move(s);
      mixture_won = true;
    }
  }
  return {best, mixture_won};
}

template <typename PerInput>
SquashResult maximize(const Behavior& device, PerInput per_input) {
  const Scenario& sc = device.scenario();
  if (sc.parties() != 3) throw ShapeError("squash needs a device with parties (A, B, E)");
  SquashResult result;
  result.value = -1;
  for (std::size_t x = 0; x < sc.inputs(0); ++x) {
    for (std::size_t y = 0; y < sc.inputs(1); ++y) {
      InputOutcome o = per_input(x, y);
      result.per_input.push_back(o.best.value);
      if (o.best.value > result.value) {
        result.value = o.best.value;
        result.x = x;
        result.y = y;
        result.witness = std::move(o.best.strategy);
        result.mixture_won = o.mixture_won;
      }
    }
  }
  result.value = std::max(0.0, result.value);
  return result;
}

}  // namespace

SquashResult squash(const QuantifierFn& quantifier, const Behavior& device, const SquashConfig& config) {
  return maximize(device, [&](std::size_t x, std::size_t y) { return generic_min(quantifier, device, x, y, config); });
}

SquashResult squash(Quantifier quantifier, const Behavior& device, const SquashConfig& config) {
  switch (quantifier) {
    case Quantifier::MutualInformation:
      return squash([](const TripartiteDistribution& p) { return mutual_information(p); }, device, config);
    case Quantifier::ConditionalMutualInformation:
      return squash([](const TripartiteDistribution& p) { return cond_mutual_information(p); }, device, config);
    case Quantifier::Intrinsic:
      return maximize(device, [&](std::size_t x, std::size_t y) { return intrinsic_min(device, x, y, config); });
  }
  throw PreconditionError("unknown quantifier");
}

SquashResult squashed_nonlocality(const Behavior& behavior, const SquashConfig& config,
                                  const PolytopeOptions& options) {
  if (behavior.scenario().parties() != 2) throw ShapeError("squashed nonlocality needs a bipartite behavior");
  const CompleteExtension ce = nsce(behavior, options);
  return squash(Quantifier::Intrinsic, ce.extension, config);
}

SquashResult squash_cmi_lp(const Behavior& behavior, const NsPolytope& polytope) {
  const Scenario& sc = behavior.scenario();
  if (sc.parties() != 2) throw ShapeError("squash_cmi_lp needs a bipartite behavior");
  if (!(polytope.scenario() == sc)) throw ShapeError("polytope scenario differs from the behavior");
  require_valid(behavior);
  const auto& verts = polytope.vertices();

  LinearProgram lp;
  lp.variables = verts.size();
  lp.a.assign(behavior.size(), RVector(verts.size()));
  lp.b = behavior.table();
  for (std::size_t j = 0; j < verts.size(); ++j)
    for (std::size_t k = 0; k < behavior.size(); ++k) lp.a[k][j] = verts[j].behavior[k];

  SquashResult result;
  result.value = -1;
  for (std::size_t x = 0; x < sc.inputs(0); ++x) {
    for (std::size_t y = 0; y < sc.inputs(1); ++y) {
      const std::vector<std::size_t> xs = {x, y};
      const std::size_t block = sc.encode_inputs(xs);
      const std::size_t va = sc.outputs(0, x), vb = sc.outputs(1, y);
      lp.c.assign(verts.size(), Rational(0));
      for (std::size_t j = 0; j < verts.size(); ++j) {
        std::vector<double> pab(va * vb);
        for (std::size_t k = 0; k < va * vb; ++k) pab[k] = to_double(verts[j].behavior[sc.block_offset(block) + k]);
        lp.c[j] = Rational(mutual_information(va, vb, pab));
      }
      const LpResult r = solve_lp(lp);
      if (r.status != LpStatus::Optimal) throw InvalidBehavior("behavior is not in the polytope hull");
      const double v = to_double(r.objective);
      result.per_input.push_back(v);
      if (v > result.value) {
        result.value = v;
        result.x = x;
        result.y = y;
      }
    }
  }
  result.value = std::max(0.0, result.value);
  return result;
}

}  // namespace boxworld
