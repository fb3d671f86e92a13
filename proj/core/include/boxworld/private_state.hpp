#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boxworld/operator.hpp"

namespace boxworld {

inline constexpr double kUnitaryTolerance = 1e-10;

/// gamma = (1/d_k) sum_ij |ii><jj| (x) U_i sigma U_j^dagger on factors (A, B, A', B')
/// with dimensions (d_k, d_k, d_s, d_s). `sigma` acts on the d_s^2 shield.
DenseOperator build_private_state(std::size_t dk, std::size_t ds, const CMatrix& sigma,
                                  const std::vector<CMatrix>& unitaries);

/// Removes every key block |ij><kl| with (i,j) != (k,l); factors 0 and 1 are the key.
DenseOperator key_attack(const DenseOperator& gamma);

/// The pbit 1/2 [[I, 0, 0, F], [0...], [0...], [F, 0, 0, I]] / d_s^2 on (A, B, A', B').
DenseOperator build_omega(std::size_t ds);

/// Outcome distribution p(i, j) of measuring both key factors in the computational basis.
std::vector<double> key_distribution(const DenseOperator& rho);

/// Haar-random unitary from the QR of a complex Gaussian matrix.
CMatrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace boxworld
