#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace boxworld {

using CMatrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;

/// Square complex matrix on a tensor product with ordered factor dimensions.
class DenseOperator {
 public:
  DenseOperator(CMatrix matrix, std::vector<std::size_t> factors);

  const CMatrix& matrix() const { return m_; }
  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

  cplx trace() const { return m_.trace(); }
  bool is_hermitian(double tol = kHermitianTolerance) const;
  /// Eigenvalues of the Hermitian part, ascending.
  Eigen::VectorXd eigenvalues() const;
  double min_eigenvalue() const { return eigenvalues()(0); }
  /// Hermitian, unit trace and PSD within the module tolerances.
  bool is_state() const;

 private:
  CMatrix m_;
  std::vector<std::size_t> factors_;
};

/// Transposes the listed tensor factors: |i><j| has i_k and j_k swapped for k in `subsystems`.
DenseOperator partial_transpose(const DenseOperator& rho, const std::vector<std::size_t>& subsystems);

/// The default cut: with factors (A, B, A', B') transposes B and B'; with (A, B) transposes B.
std::vector<std::size_t> default_ppt_cut(const DenseOperator& rho);

bool is_ppt(const DenseOperator& rho);
bool is_ppt(const DenseOperator& rho, const std::vector<std::size_t>& subsystems);

/// Sum of singular values.
double trace_norm(const CMatrix& m);

/// Swap on C^d (x) C^d: F |ij> = |ji>.
CMatrix swap_operator(std::size_t d);

}  // namespace boxworld
