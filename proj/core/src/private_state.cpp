#include "boxworld/private_state.hpp"

#include <random>

#include "boxworld/error.hpp"

namespace boxworld {

DenseOperator build_private_state(std::size_t dk, std::size_t ds, const CMatrix& sigma,
                                  const std::vector<CMatrix>& unitaries) {
  if (dk < 2 || ds < 1) throw PreconditionError("private state needs d_k >= 2 and d_s >= 1");
  const std::size_t s = ds * ds;
  if (static_cast<std::size_t>(sigma.rows()) != s || static_cast<std::size_t>(sigma.cols()) != s)
    throw ShapeError("shield state must be d_s^2 x d_s^2");
  if (!DenseOperator(sigma, {ds, ds}).is_state()) throw PreconditionError("shield operator is not a valid state");
  if (unitaries.size() != dk) throw ShapeError("need one twisting unitary per key value");
  for (const auto& u : unitaries) {
    if (static_cast<std::size_t>(u.rows()) != s || static_cast<std::size_t>(u.cols()) != s)
      throw ShapeError("twisting unitary must be d_s^2 x d_s^2");
    if ((u.adjoint() * u - CMatrix::Identity(s, s)).norm() > kUnitaryTolerance)
      throw PreconditionError("twisting operator is not unitary");
  }
  const std::size_t n = dk * dk * s;
  CMatrix g = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      const CMatrix block = unitaries[i] * sigma * unitaries[j].adjoint() / static_cast<double>(dk);
      g.block((i * dk + i) * s, (j * dk + j) * s, s, s) = block;
    }
  return DenseOperator(std::move(g), {dk, dk, ds, ds});
}

DenseOperator key_attack(const DenseOperator& gamma) {
  const auto& f = gamma.factors();
  if (f.size() != 4) throw ShapeError("key attack needs factors (A, B, A', B')");
  const std::size_t key = f[0] * f[1];
  const std::size_t s = f[2] * f[3];
  CMatrix out = CMatrix::Zero(gamma.dim(), gamma.dim());
  for (std::size_t k = 0; k < key; ++k) out.block(k * s, k * s, s, s) = gamma.matrix().block(k * s, k * s, s, s);
  return DenseOperator(std::move(out), f);
}

DenseOperator build_omega(std::size_t ds) {
  if (ds < 2) throw PreconditionError("Omega needs d_s >= 2");
  const std::size_t s = ds * ds;
  const double scale = 0.5 / static_cast<double>(s);
  const CMatrix id = CMatrix::Identity(s, s);
  const CMatrix swap = swap_operator(ds);
  CMatrix m = CMatrix::Zero(4 * s, 4 * s);
  m.block(0, 0, s, s) = scale * id;
  m.block(3 * s, 3 * s, s, s) = scale * id;
  m.block(0, 3 * s, s, s) = scale * swap;
  m.block(3 * s, 0, s, s) = scale * swap;
  return DenseOperator(std::move(m), {2, 2, ds, ds});
}

std::vector<double> key_distribution(const DenseOperator& rho) {
  const auto& f = rho.factors();
  if (f.size() != 4) throw ShapeError("key distribution needs factors (A, B, A', B')");
  const std::size_t key = f[0] * f[1];
  const std::size_t s = f[2] * f[3];
  std::vector<double> p(key);
  for (std::size_t k = 0; k < key; ++k) p[k] = rho.matrix().block(k * s, k * s, s, s).trace().real();
  return p;
}

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = cplx(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return q;
}

}  // namespace boxworld
