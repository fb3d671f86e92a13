#include "boxworld/operator.hpp"

#include <algorithm>

#include "boxworld/error.hpp"

namespace boxworld {

DenseOperator::DenseOperator(CMatrix matrix, std::vector<std::size_t> factors)
    : m_(std::move(matrix)), factors_(std::move(factors)) {
  if (m_.rows() != m_.cols()) throw ShapeError("operator is not square");
  std::size_t prod = 1;
  for (std::size_t d : factors_) {
    if (d == 0) throw ShapeError("zero factor dimension");
    prod *= d;
  }
  if (factors_.empty() || prod != static_cast<std::size_t>(m_.rows()))
    throw ShapeError("factor dimensions do not multiply to the matrix size");
}

bool DenseOperator::is_hermitian(double tol) const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol; }

Eigen::VectorXd DenseOperator::eigenvalues() const {
  const CMatrix h = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool DenseOperator::is_state() const {
  return is_hermitian() && std::abs(trace() - cplx(1, 0)) <= kTraceTolerance && min_eigenvalue() >= -kPsdTolerance;
}

DenseOperator partial_transpose(const DenseOperator& rho, const std::vector<std::size_t>& subsystems) {
  const auto& f = rho.factors();
  std::vector<bool> flip(f.size(), false);
  for (std::size_t s : subsystems) {
    if (s >= f.size()) throw ShapeError("subsystem index out of range");
    flip[s] = true;
  }
  const std::size_t n = rho.dim();
  // Strides of each factor in the row-major multi-index.
  std::vector<std::size_t> stride(f.size(), 1);
  for (std::size_t k = f.size() - 1; k-- > 0;) stride[k] = stride[k + 1] * f[k + 1];

  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ti = 0, tj = 0;
      for (std::size_t k = 0; k < f.size(); ++k) {
        const std::size_t ik = (i / stride[k]) % f[k];
        const std::size_t jk = (j / stride[k]) % f[k];
        ti += (flip[k] ? jk : ik) * stride[k];
        tj += (flip[k] ? ik : jk) * stride[k];
      }
      out(ti, tj) = rho.matrix()(i, j);
    }
  }
  return DenseOperator(std::move(out), f);
}

std::vector<std::size_t> default_ppt_cut(const DenseOperator& rho) {
  switch (rho.factors().size()) {
    case 2: return {1};
    case 4: return {1, 3};
    default: throw ShapeError("no default bipartite cut for " + std::to_string(rho.factors().size()) + " factors");
  }
}

bool is_ppt(const DenseOperator& rho) { return is_ppt(rho, default_ppt_cut(rho)); }

bool is_ppt(const DenseOperator& rho, const std::vector<std::size_t>& subsystems) {
  return partial_transpose(rho, subsystems).min_eigenvalue() >= -kPsdTolerance;
}

double trace_norm(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

CMatrix swap_operator(std::size_t d) {
  CMatrix f = CMatrix::Zero(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1;
  return f;
}

}  // namespace boxworld
