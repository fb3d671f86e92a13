#include "boxworld/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace boxworld {

namespace {

constexpr double kFloor = 1e-300;
// Bounded so that step * 0 stays 0.
constexpr double kMaxStep = 1e6;

/// I(A:B|F) for Q(a,b,f) stored at ab * nf + f.
double cmi_table(const std::vector<double>& q, std::size_t na, std::size_t nb, std::size_t nf) {
  std::vector<double> qf(nf, 0.0), qaf(na * nf, 0.0), qbf(nb * nf, 0.0);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t f = 0; f < nf; ++f) {
        const double v = q[(a * nb + b) * nf + f];
        qf[f] += v;
        qaf[a * nf + f] += v;
        qbf[b * nf + f] += v;
      }
  double i = 0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t f = 0; f < nf; ++f) {
        const double v = q[(a * nb + b) * nf + f];
        if (v > 0) i += v * (std::log2(v) + std::log2(qf[f]) - std::log2(qaf[a * nf + f]) - std::log2(qbf[b * nf + f]));
      }
  return std::max(0.0, i);
}

class Objective {
 public:
  explicit Objective(const TripartiteDistribution& p) : na_(p.na()), nb_(p.nb()), ne_(p.ne()), p_(p.table()) {}

  std::size_t ne() const { return ne_; }

  std::vector<double> push(const std::vector<double>& lambda, std::size_t nf) const {
    std::vector<double> q(na_ * nb_ * nf, 0.0);
    for (std::size_t ab = 0; ab < na_ * nb_; ++ab)
      for (std::size_t e = 0; e < ne_; ++e) {
        const double v = p_[ab * ne_ + e];
        if (v == 0) continue;
        for (std::size_t f = 0; f < nf; ++f) q[ab * nf + f] += v * lambda[f * ne_ + e];
      }
    return q;
  }

  double value(const std::vector<double>& lambda, std::size_t nf) const { return cmi_table(push(lambda, nf), na_, nb_, nf); }

  /// g[f][e] = sum_ab P(a,b,e) log2(Q(abf) Q(f) / (Q(af) Q(bf))).
  std::vector<double> gradient(const std::vector<double>& lambda, std::size_t nf) const {
    const auto q = push(lambda, nf);
    std::vector<double> qf(nf, 0.0), qaf(na_ * nf, 0.0), qbf(nb_ * nf, 0.0);
    for (std::size_t a = 0; a < na_; ++a)
      for (std::size_t b = 0; b < nb_; ++b)
        for (std::size_t f = 0; f < nf; ++f) {
          const double v = q[(a * nb_ + b) * nf + f];
          qf[f] += v;
          qaf[a * nf + f] += v;
          qbf[b * nf + f] += v;
        }
    std::vector<double> g(nf * ne_, 0.0);
    for (std::size_t a = 0; a < na_; ++a)
      for (std::size_t b = 0; b < nb_; ++b)
        for (std::size_t f = 0; f < nf; ++f) {
          const double v = std::max(q[(a * nb_ + b) * nf + f], kFloor);
          // Summed logs: the floored product of the two marginals can underflow.
          const double l = std::log2(v) + std::log2(std::max(qf[f], kFloor)) -
                           std::log2(std::max(qaf[a * nf + f], kFloor)) - std::log2(std::max(qbf[b * nf + f], kFloor));
          for (std::size_t e = 0; e < ne_; ++e) {
            const double pv = p_[(a * nb_ + b) * ne_ + e];
            if (pv != 0) g[f * ne_ + e] += pv * l;
          }
        }
    return g;
  }

  /// Per-group terms of I(A:B|F) for a label partition, used by the merge path.
  double group_term(const std::vector<double>& column) const {
    double qg = 0;
    std::vector<double> qa(na_, 0.0), qb(nb_, 0.0);
    for (std::size_t a = 0; a < na_; ++a)
      for (std::size_t b = 0; b < nb_; ++b) {
        const double v = column[a * nb_ + b];
        qg += v;
        qa[a] += v;
        qb[b] += v;
      }
    double t = 0;
    for (std::size_t a = 0; a < na_; ++a)
      for (std::size_t b = 0; b < nb_; ++b) {
        const double v = column[a * nb_ + b];
        if (v > 0) t += v * (std::log2(v) + std::log2(qg) - std::log2(qa[a]) - std::log2(qb[b]));
      }
    return t;
  }

  std::vector<double> label_column(std::size_t e) const {
    std::vector<double> c(na_ * nb_);
    for (std::size_t ab = 0; ab < na_ * nb_; ++ab) c[ab] = p_[ab * ne_ + e];
    return c;
  }

 private:
  std::size_t na_, nb_, ne_;
  std::vector<double> p_;
};

struct Candidate {
  double value;
  std::vector<std::size_t> map;  // deterministic label map e -> f
  std::size_t outputs;
  std::string method;
};

/// Greedy pairwise merging down to a single label; every partition on the path is a candidate.
std::vector<Candidate> merge_path(const Objective& obj) {
  const std::size_t ne = obj.ne();
  std::vector<std::vector<double>> columns;
  std::vector<double> terms;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < ne; ++e) {
    columns.push_back(obj.label_column(e));
    terms.push_back(obj.group_term(columns.back()));
    groups.push_back({e});
  }
  auto snapshot = [&](double total) {
    Candidate c{total, std::vector<std::size_t>(ne), groups.size(), "merge"};
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t e : groups[g]) c.map[e] = g;
    return c;
  };
  double total = 0;
  for (double t : terms) total += t;
  std::vector<Candidate> path;
  while (groups.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 1;
    std::vector<double> best_col;
    double best_term = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        std::vector<double> merged(columns[i]);
        for (std::size_t k = 0; k < merged.size(); ++k) merged[k] += columns[j][k];
        const double term = obj.group_term(merged);
        const double delta = term - terms[i] - terms[j];
        if (delta < best) {
          best = delta;
          bi = i;
          bj = j;
          best_col = std::move(merged);
          best_term = term;
        }
      }
    columns[bi] = std::move(best_col);
    terms[bi] = best_term;
    groups[bi].insert(groups[bi].end(), groups[bj].begin(), groups[bj].end());
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(bj));
    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(bj));
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bj));
    total = 0;
    for (double t : terms) total += t;
    path.push_back(snapshot(std::max(0.0, total)));
  }
  return path;
}

std::vector<double> deterministic_lambda(const std::vector<std::size_t>& map, std::size_t nf, double smoothing) {
  const std::size_t ne = map.size();
  std::vector<double> lambda(nf * ne, smoothing / static_cast<double>(nf));
  for (std::size_t e = 0; e < ne; ++e) lambda[map[e] * ne + e] += 1 - smoothing;
  return lambda;
}

struct DescentOutcome {
  std::vector<double> lambda;
  double value;
  std::size_t iterations;
  bool converged;
};

DescentOutcome descend(const Objective& obj, std::vector<double> lambda, std::size_t nf, const IntrinsicConfig& cfg) {
  const std::size_t ne = obj.ne();
  double value = obj.value(lambda, nf);
  double step = 1.0;
  std::size_t it = 0;
  bool converged = false;
  std::vector<double> trial(lambda.size());
  for (; it < cfg.max_iterations; ++it) {
    const auto g = obj.gradient(lambda, nf);
    bool accepted = false;
    while (step > 1e-12) {
      for (std::size_t e = 0; e < ne; ++e) {
        double gmin = std::numeric_limits<double>::infinity();
        for (std::size_t f = 0; f < nf; ++f) gmin = std::min(gmin, g[f * ne + e]);
        double norm = 0;
        for (std::size_t f = 0; f < nf; ++f) {
          const double v = lambda[f * ne + e] * std::exp(-step * (g[f * ne + e] - gmin));
          trial[f * ne + e] = v;
          norm += v;
        }
        // Every weight in the column underflowed: keep the column as it was.
        if (!(norm > 0) || !std::isfinite(norm)) {
          for (std::size_t f = 0; f < nf; ++f) trial[f * ne + e] = lambda[f * ne + e];
          continue;
        }
        for (std::size_t f = 0; f < nf; ++f) trial[f * ne + e] /= norm;
      }
      const double tv = obj.value(trial, nf);
      const bool finite = std::all_of(trial.begin(), trial.end(), [](double v) { return std::isfinite(v); });
      if (finite && tv < value) {
        const double gain = value - tv;
        lambda.swap(trial);
        value = tv;
        step = std::min(step * 1.5, kMaxStep);
        accepted = true;
        if (gain < cfg.tolerance) converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      converged = true;
      break;
    }
    if (converged || value <= 0) break;
  }
  return {std::move(lambda), value, it, converged};
}

std::vector<std::size_t> round_channel(const std::vector<double>& lambda, std::size_t nf, std::size_t ne) {
  std::vector<std::size_t> map(ne, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t f = 1; f < nf; ++f) {
      if (lambda[f * ne + e] > lambda[map[e] * ne + e]) map[e] = f;
    }
  }
  return map;
}

StochasticChannel to_channel(const std::vector<double>& lambda, std::size_t nf, std::size_t ne) {
  std::vector<double> m(lambda);
  for (std::size_t e = 0; e < ne; ++e) {
    double s = 0;
    for (std::size_t f = 0; f < nf; ++f) s += m[f * ne + e];
    for (std::size_t f = 0; f < nf; ++f) m[f * ne + e] /= s;
  }
  return StochasticChannel(ne, nf, std::move(m));
}

IntrinsicResult run(const TripartiteDistribution& p, const IntrinsicConfig& cfg) {
  const Objective obj(p);
  const std::size_t ne = p.ne();

  std::vector<Candidate> candidates;
  {
    std::vector<std::size_t> id(ne);
    for (std::size_t e = 0; e < ne; ++e) id[e] = e;
    candidates.push_back({cond_mutual_information(p), id, ne, "identity"});
    candidates.push_back({mutual_information(p), std::vector<std::size_t>(ne, 0), 1, "constant"});
  }
  for (auto& c : merge_path(obj)) candidates.push_back(std::move(c));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  const Candidate& top = candidates.front();
  IntrinsicResult best;
  best.value = top.value;
  best.channel = StochasticChannel::deterministic(top.map, top.outputs);
  best.method = top.method;
  if (!cfg.descent || best.value <= 0) return best;

  const std::size_t nf = std::max<std::size_t>(2, cfg.max_outputs == 0 ? ne : cfg.max_outputs);
  std::mt19937_64 rng(cfg.seed);
  std::gamma_distribution<double> gamma(1.0, 1.0);

  std::vector<std::vector<double>> starts;
  for (std::size_t k = 0; k < std::min(cfg.refine, candidates.size()); ++k) {
    if (candidates[k].outputs > nf) continue;
    starts.push_back(deterministic_lambda(candidates[k].map, nf, 1e-3));
  }
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    std::vector<double> lambda(nf * ne);
    for (auto& v : lambda) v = gamma(rng) + 1e-12;
    starts.push_back(std::move(lambda));
  }

  bool all_converged = true;
  for (auto& start : starts) {
    auto out = descend(obj, to_channel(start, nf, ne).matrix(), nf, cfg);
    best.iterations += out.iterations;
    all_converged = all_converged && out.converged;
    if (out.value < best.value) {
      best.value = out.value;
      best.channel = to_channel(out.lambda, nf, ne);
      best.method = "descent";
    }
    const auto map = round_channel(out.lambda, nf, ne);
    const double rounded = obj.value(deterministic_lambda(map, nf, 0.0), nf);
    if (rounded < best.value) {
      best.value = rounded;
      best.channel = StochasticChannel::deterministic(map, nf);
      best.method = "descent";
    }
  }
  best.converged = all_converged;
  best.value = std::max(0.0, best.value);
  return best;
}

}  // namespace

IntrinsicResult intrinsic_information(const TripartiteDistribution& p, const IntrinsicConfig& config) {
  return run(p, config);
}

IntrinsicResult intrinsic_information_screen(const TripartiteDistribution& p) {
  IntrinsicConfig cfg;
  cfg.descent = false;
  return run(p, cfg);
}

}  // namespace boxworld
