#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace boxworld {

/// Classical part a (honest outputs and transcript) jointly with Eve's device:
/// P(a, e | z) stored at (z * na + a) * ne + e. The classical marginal p(a)
/// must not depend on z, so for each a Eve holds a valid single-party behavior.
class CdState {
 public:
  CdState(std::size_t nz, std::size_t na, std::size_t ne, std::vector<double> table);

  std::size_t nz() const { return nz_; }
  std::size_t na() const { return na_; }
  std::size_t ne() const { return ne_; }
  double operator()(std::size_t z, std::size_t a, std::size_t e) const { return p_[(z * na_ + a) * ne_ + e]; }
  const std::vector<double>& table() const { return p_; }

  std::vector<double> classical_marginal() const;
  /// Eve's marginal p(e|z).
  std::vector<double> eve_marginal(std::size_t z) const;

  /// Perfect key delta(s_A, s_B) / |S| on a = s_A * key_size + s_B, with Eve's marginal kept.
  CdState ideal(std::size_t key_size) const;

  bool operator==(const CdState& other) const = default;

 private:
  std::size_t nz_, na_, ne_;
  std::vector<double> p_;
};

/// 1/2 sum_a max_z sum_e |P1(a,e|z) - P2(a,e|z)|, the supremum taken separately for each a.
double ns_norm_cd(const CdState& p1, const CdState& p2);

/// 1/2 sum_a |p(a) - q(a)|.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace boxworld
