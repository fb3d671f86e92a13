#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace boxworld {

inline constexpr double kProbabilityTolerance = 1e-12;

/// Joint P(a,b,e) stored at (a * nb + b) * ne + e.
class TripartiteDistribution {
 public:
  /// Entries above -tol are clamped to >= 0; the total must be 1 within tol.
  TripartiteDistribution(std::size_t na, std::size_t nb, std::size_t ne, std::vector<double> p,
                         std::string provenance = {});

  std::size_t na() const { return na_; }
  std::size_t nb() const { return nb_; }
  std::size_t ne() const { return ne_; }
  double operator()(std::size_t a, std::size_t b, std::size_t e) const { return p_[(a * nb_ + b) * ne_ + e]; }
  const std::vector<double>& table() const { return p_; }
  const std::string& provenance() const { return provenance_; }

 private:
  std::size_t na_, nb_, ne_;
  std::vector<double> p_;
  std::string provenance_;
};

/// Column-stochastic p(f|e) stored at f * inputs + e.
class StochasticChannel {
 public:
  StochasticChannel(std::size_t inputs, std::size_t outputs, std::vector<double> m);

  static StochasticChannel identity(std::size_t n);
  static StochasticChannel constant(std::size_t inputs);
  /// f = map[e].
  static StochasticChannel deterministic(const std::vector<std::size_t>& map, std::size_t outputs);

  std::size_t inputs() const { return in_; }
  std::size_t outputs() const { return out_; }
  double operator()(std::size_t f, std::size_t e) const { return m_[f * in_ + e]; }
  const std::vector<double>& matrix() const { return m_; }

 private:
  std::size_t in_, out_;
  std::vector<double> m_;
};

/// P(a,b,f) = sum_e P(a,b,e) p(f|e).
TripartiteDistribution apply_channel(const TripartiteDistribution& p, const StochasticChannel& channel);

/// Shannon entropy in bits of a probability vector; 0 log 0 = 0.
double entropy(std::span<const double> p);

/// I(A:B) of an na x nb joint table, in bits.
double mutual_information(std::size_t na, std::size_t nb, std::span<const double> pab);
/// I(A:B) of the (A,B) marginal.
double mutual_information(const TripartiteDistribution& p);
/// I(A:B|E) = sum_e p(e) I(A:B|E=e), in bits.
double cond_mutual_information(const TripartiteDistribution& p);

}  // namespace boxworld
