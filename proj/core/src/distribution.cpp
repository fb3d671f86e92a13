#include "boxworld/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "boxworld/error.hpp"

namespace boxworld {

TripartiteDistribution::TripartiteDistribution(std::size_t na, std::size_t nb, std::size_t ne, std::vector<double> p,
                                               std::string provenance)
    : na_(na), nb_(nb), ne_(ne), p_(std::move(p)), provenance_(std::move(provenance)) {
  if (na == 0 || nb == 0 || ne == 0 || p_.size() != na * nb * ne)
    throw ShapeError("distribution table does not match its alphabets");
  double total = 0;
  for (auto& v : p_) {
    if (!std::isfinite(v) || v < -kProbabilityTolerance) throw InvalidBehavior("negative or non-finite probability");
    if (v < 0) v = 0;
    total += v;
  }
  if (std::abs(total - 1) > kProbabilityTolerance)
    throw InvalidBehavior("distribution sums to " + std::to_string(total));
}

StochasticChannel::StochasticChannel(std::size_t inputs, std::size_t outputs, std::vector<double> m)
    : in_(inputs), out_(outputs), m_(std::move(m)) {
  if (inputs == 0 || outputs == 0 || m_.size() != inputs * outputs) throw ShapeError("channel matrix has wrong size");
  for (std::size_t e = 0; e < in_; ++e) {
    double col = 0;
    for (std::size_t f = 0; f < out_; ++f) {
      double& v = m_[f * in_ + e];
      if (!std::isfinite(v) || v < -kProbabilityTolerance) throw InvalidBehavior("negative or non-finite channel entry");
      if (v < 0) v = 0;
      col += v;
    }
    if (std::abs(col - 1) > kProbabilityTolerance)
      throw InvalidBehavior("channel column " + std::to_string(e) + " sums to " + std::to_string(col));
  }
}

StochasticChannel StochasticChannel::identity(std::size_t n) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t e = 0; e < n; ++e) m[e * n + e] = 1;
  return StochasticChannel(n, n, std::move(m));
}

StochasticChannel StochasticChannel::constant(std::size_t inputs) {
  return StochasticChannel(inputs, 1, std::vector<double>(inputs, 1.0));
}

StochasticChannel StochasticChannel::deterministic(const std::vector<std::size_t>& map, std::size_t outputs) {
  std::vector<double> m(map.size() * outputs, 0.0);
  for (std::size_t e = 0; e < map.size(); ++e) {
    if (map[e] >= outputs) throw ShapeError("channel map target out of range");
    m[map[e] * map.size() + e] = 1;
  }
  return StochasticChannel(map.size(), outputs, std::move(m));
}

TripartiteDistribution apply_channel(const TripartiteDistribution& p, const StochasticChannel& ch) {
  if (ch.inputs() != p.ne()) throw ShapeError("channel input alphabet does not match E");
  const std::size_t nf = ch.outputs();
  std::vector<double> q(p.na() * p.nb() * nf, 0.0);
  for (std::size_t a = 0; a < p.na(); ++a)
    for (std::size_t b = 0; b < p.nb(); ++b)
      for (std::size_t e = 0; e < p.ne(); ++e) {
        const double v = p(a, b, e);
        if (v == 0) continue;
        for (std::size_t f = 0; f < nf; ++f) q[(a * p.nb() + b) * nf + f] += v * ch(f, e);
      }
  return TripartiteDistribution(p.na(), p.nb(), nf, std::move(q), p.provenance());
}

double entropy(std::span<const double> p) {
  double h = 0;
  for (double v : p) {
    if (v > 0) h -= v * std::log2(v);
  }
  return h;
}

double mutual_information(std::size_t na, std::size_t nb, std::span<const double> pab) {
  if (pab.size() != na * nb) throw ShapeError("joint table does not match its alphabets");
  std::vector<double> pa(na, 0.0), pb(nb, 0.0);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      pa[a] += pab[a * nb + b];
      pb[b] += pab[a * nb + b];
    }
  double i = 0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const double v = pab[a * nb + b];
      if (v > 0) i += v * (std::log2(v) - std::log2(pa[a]) - std::log2(pb[b]));
    }
  return std::max(0.0, i);
}

double mutual_information(const TripartiteDistribution& p) {
  std::vector<double> pab(p.na() * p.nb(), 0.0);
  for (std::size_t a = 0; a < p.na(); ++a)
    for (std::size_t b = 0; b < p.nb(); ++b)
      for (std::size_t e = 0; e < p.ne(); ++e) pab[a * p.nb() + b] += p(a, b, e);
  return mutual_information(p.na(), p.nb(), pab);
}

double cond_mutual_information(const TripartiteDistribution& p) {
  const std::size_t na = p.na(), nb = p.nb(), ne = p.ne();
  std::vector<double> pe(ne, 0.0), pae(na * ne, 0.0), pbe(nb * ne, 0.0);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t e = 0; e < ne; ++e) {
        const double v = p(a, b, e);
        pe[e] += v;
        pae[a * ne + e] += v;
        pbe[b * ne + e] += v;
      }
  double i = 0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t e = 0; e < ne; ++e) {
        const double v = p(a, b, e);
        // Summed logs: products of tiny masses underflow.
        if (v > 0) i += v * (std::log2(v) + std::log2(pe[e]) - std::log2(pae[a * ne + e]) - std::log2(pbe[b * ne + e]));
      }
  return std::max(0.0, i);
}

}  // namespace boxworld
