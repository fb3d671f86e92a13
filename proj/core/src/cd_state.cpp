#include "boxworld/cd_state.hpp"

#include <algorithm>
#include <cmath>

#include "boxworld/distribution.hpp"
#include "boxworld/error.hpp"

namespace boxworld {

CdState::CdState(std::size_t nz, std::size_t na, std::size_t ne, std::vector<double> table)
    : nz_(nz), na_(na), ne_(ne), p_(std::move(table)) {
  if (nz == 0 || na == 0 || ne == 0 || p_.size() != nz * na * ne)
    throw ShapeError("c-d state table does not match its alphabets");
  for (double& v : p_) {
    if (!std::isfinite(v) || v < -kProbabilityTolerance) throw InvalidBehavior("negative c-d state entry");
    if (v < 0) v = 0;
  }
  std::vector<double> first(na, 0.0);
  for (std::size_t z = 0; z < nz; ++z) {
    double total = 0;
    for (std::size_t a = 0; a < na; ++a) {
      double pa = 0;
      for (std::size_t e = 0; e < ne; ++e) pa += (*this)(z, a, e);
      total += pa;
      if (z == 0) {
        first[a] = pa;
      } else if (std::abs(pa - first[a]) > kProbabilityTolerance) {
        throw InvalidBehavior("classical marginal depends on Eve's input z=" + std::to_string(z) + " at a=" +
                              std::to_string(a));
      }
    }
    if (std::abs(total - 1) > kProbabilityTolerance)
      throw InvalidBehavior("c-d state at z=" + std::to_string(z) + " sums to " + std::to_string(total));
  }
}

std::vector<double> CdState::classical_marginal() const {
  std::vector<double> pa(na_, 0.0);
  for (std::size_t a = 0; a < na_; ++a)
    for (std::size_t e = 0; e < ne_; ++e) pa[a] += (*this)(0, a, e);
  return pa;
}

std::vector<double> CdState::eve_marginal(std::size_t z) const {
  if (z >= nz_) throw ShapeError("Eve input out of range");
  std::vector<double> pe(ne_, 0.0);
  for (std::size_t a = 0; a < na_; ++a)
    for (std::size_t e = 0; e < ne_; ++e) pe[e] += (*this)(z, a, e);
  return pe;
}

CdState CdState::ideal(std::size_t key_size) const {
  if (key_size == 0 || key_size * key_size != na_)
    throw ShapeError("classical alphabet of size " + std::to_string(na_) + " is not a key pair alphabet");
  std::vector<double> table(p_.size(), 0.0);
  const double share = 1.0 / static_cast<double>(key_size);
  for (std::size_t z = 0; z < nz_; ++z) {
    const auto pe = eve_marginal(z);
    for (std::size_t s = 0; s < key_size; ++s)
      for (std::size_t e = 0; e < ne_; ++e) table[(z * na_ + s * key_size + s) * ne_ + e] = share * pe[e];
  }
  return CdState(nz_, na_, ne_, std::move(table));
}

double ns_norm_cd(const CdState& p1, const CdState& p2) {
  if (p1.nz() != p2.nz() || p1.na() != p2.na() || p1.ne() != p2.ne())
    throw ShapeError("c-d states have different shapes");
  double total = 0;
  for (std::size_t a = 0; a < p1.na(); ++a) {
    double sup = 0;
    for (std::size_t z = 0; z < p1.nz(); ++z) {
      double s = 0;
      for (std::size_t e = 0; e < p1.ne(); ++e) s += std::abs(p1(z, a, e) - p2(z, a, e));
      sup = std::max(sup, s);
    }
    total += sup;
  }
  return 0.5 * total;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ShapeError("distributions have different sizes");
  double total = 0;
  for (std::size_t a = 0; a < p.size(); ++a) total += std::abs(p[a] - q[a]);
  return 0.5 * total;
}

}  // namespace boxworld
