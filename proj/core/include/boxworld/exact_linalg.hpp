#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "boxworld/rational.hpp"

namespace boxworld {

using RVector = std::vector<Rational>;
/// Row-major dense rational matrix; all rows have equal length.
using RMatrix = std::vector<RVector>;

struct Rref {
  RMatrix matrix;                    ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   ///< pivot column of each kept row
  std::vector<std::size_t> row_origin;  ///< input row that became each pivot row; together a row-space basis
};

/// Gauss-Jordan elimination over exact rationals on an m x n matrix.
Rref rref(const RMatrix& a, std::size_t cols);

std::size_t rank(const RMatrix& a, std::size_t cols);

/// Basis of {y : A y = 0}, one vector per free column.
RMatrix nullspace(const RMatrix& a, std::size_t cols);

/// Some solution of A x = b, or nullopt when inconsistent.
std::optional<RVector> solve_particular(const RMatrix& a, const RVector& b, std::size_t cols);

/// Dimension of the affine hull of the points (-1 for an empty set).
long affine_dimension(const RMatrix& points);

/// Inverse of a square nonsingular matrix; throws on singular input.
RMatrix inverse(const RMatrix& a);

}  // namespace boxworld
