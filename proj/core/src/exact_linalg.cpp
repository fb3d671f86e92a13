#include "boxworld/exact_linalg.hpp"

#include "boxworld/error.hpp"

namespace boxworld {

Rref rref(const RMatrix& a, std::size_t cols) {
  Rref out;
  RMatrix m = a;
  std::vector<std::size_t> origin(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw ShapeError("ragged matrix");
    origin[i] = i;
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    std::swap(origin[row], origin[pivot]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t k = c; k < cols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (m[row][k] != 0) m[r][k] -= f * m[row][k];
      }
    }
    out.pivots.push_back(c);
    out.row_origin.push_back(origin[row]);
    ++row;
  }
  m.resize(row);
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const RMatrix& a, std::size_t cols) { return rref(a, cols).pivots.size(); }

RMatrix nullspace(const RMatrix& a, std::size_t cols) {
  const Rref r = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  RMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> solve_particular(const RMatrix& a, const RVector& b, std::size_t cols) {
  if (b.size() != a.size()) throw ShapeError("right-hand side length mismatch");
  RMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const Rref r = rref(aug, cols + 1);
  RVector x(cols);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == cols) return std::nullopt;
    x[r.pivots[i]] = r.matrix[i][cols];
  }
  return x;
}

long affine_dimension(const RMatrix& points) {
  if (points.empty()) return -1;
  const std::size_t n = points.front().size();
  RMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RVector d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return static_cast<long>(rank(diffs, n));
}

RMatrix inverse(const RMatrix& a) {
  const std::size_t n = a.size();
  RMatrix aug(n, RVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ShapeError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const Rref r = rref(aug, 2 * n);
  if (r.pivots.size() < n || r.pivots[n - 1] >= n) throw Error("singular matrix");
  RMatrix inv(n, RVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r.matrix[i][n + j];
  return inv;
}

}  // namespace boxworld
