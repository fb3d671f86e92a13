#include "boxworld/vertex_enum.hpp"

#include <algorithm>
#include <mutex>

#include "boxworld/error.hpp"
#include "boxworld/parallel.hpp"

namespace boxworld {

namespace {

BigInt dot(const IVector& a, const IVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

/// Greedy row selection until rank `dim`; returns indices of a basis.
std::vector<std::size_t> independent_rows(const std::vector<IVector>& rows, std::size_t dim) {
  std::vector<std::size_t> chosen;
  RMatrix reduced;  // echelon rows with leading entry 1 at `leads`
  std::vector<std::size_t> leads;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < dim; ++r) {
    RVector v(rows[r].begin(), rows[r].end());
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (v[leads[k]] == 0) continue;
      const Rational f = v[leads[k]];
      for (std::size_t j = 0; j < dim; ++j) v[j] -= f * reduced[k][j];
    }
    std::size_t lead = dim;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j] != 0) {
        lead = j;
        break;
      }
    }
    if (lead == dim) continue;
    const Rational inv = 1 / v[lead];
    for (auto& x : v) x *= inv;
    for (auto& row : reduced) {
      if (row[lead] == 0) continue;
      const Rational f = row[lead];
      for (std::size_t j = 0; j < dim; ++j) row[j] -= f * v[j];
    }
    reduced.push_back(std::move(v));
    leads.push_back(lead);
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace

ConeRays extreme_rays(const std::vector<IVector>& rows, std::size_t dim, const DdOptions& options) {
  for (const auto& r : rows) {
    if (r.size() != dim) throw ShapeError("cone row has wrong length");
  }
  const std::size_t m = rows.size();
  const auto basis = independent_rows(rows, dim);
  if (basis.size() < dim) throw Error("cone is not pointed: constraint rank " + std::to_string(basis.size()) +
                                      " < dimension " + std::to_string(dim));

  // Initial simplicial cone: columns of the inverse of the basis rows.
  RMatrix square;
  for (std::size_t r : basis) square.emplace_back(rows[r].begin(), rows[r].end());
  const RMatrix inv = inverse(square);
  ConeRays cone;
  std::vector<bool> processed(m, false);
  for (std::size_t r : basis) processed[r] = true;
  for (std::size_t k = 0; k < dim; ++k) {
    RVector column(dim);
    for (std::size_t i = 0; i < dim; ++i) column[i] = inv[i][k];
    cone.rays.push_back(primitive_integer_vector(column));
    boost::dynamic_bitset<> zeros(m);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != k) zeros.set(basis[i]);
    }
    cone.zero_sets.push_back(std::move(zeros));
  }

  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    processed[row] = true;
    const std::size_t count = cone.rays.size();
    std::vector<BigInt> value(count);
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < count; ++i) {
      value[i] = dot(rows[row], cone.rays[i]);
      if (value[i] > 0) {
        pos.push_back(i);
      } else if (value[i] < 0) {
        neg.push_back(i);
      } else {
        zero.push_back(i);
      }
    }
    if (neg.empty()) {
      for (std::size_t i : zero) cone.zero_sets[i].set(row);
      continue;
    }

    ConeRays next;
    std::mutex next_mutex;
    parallel_for(pos.size(), [&](std::size_t pi) {
      const std::size_t p = pos[pi];
      std::vector<std::pair<IVector, boost::dynamic_bitset<>>> found;
      for (std::size_t n : neg) {
        boost::dynamic_bitset<> common = cone.zero_sets[p] & cone.zero_sets[n];
        if (dim >= 2 && common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < count && adjacent; ++q) {
          if (q != p && q != n && common.is_subset_of(cone.zero_sets[q])) adjacent = false;
        }
        if (!adjacent) continue;
        IVector ray(dim);
        for (std::size_t j = 0; j < dim; ++j) ray[j] = value[p] * cone.rays[n][j] - value[n] * cone.rays[p][j];
        make_primitive(ray);
        common.set(row);
        found.emplace_back(std::move(ray), std::move(common));
      }
      std::lock_guard<std::mutex> lock(next_mutex);
      for (auto& [ray, zs] : found) {
        next.rays.push_back(std::move(ray));
        next.zero_sets.push_back(std::move(zs));
      }
    });
    for (std::size_t i : pos) {
      next.rays.push_back(std::move(cone.rays[i]));
      next.zero_sets.push_back(std::move(cone.zero_sets[i]));
    }
    for (std::size_t i : zero) {
      cone.zero_sets[i].set(row);
      next.rays.push_back(std::move(cone.rays[i]));
      next.zero_sets.push_back(std::move(cone.zero_sets[i]));
    }
    if (next.rays.size() > options.max_rays)
      throw TooLarge("double description exceeded " + std::to_string(options.max_rays) + " rays");
    cone = std::move(next);
  }

  // Parallel insertion order is nondeterministic; sort for reproducible output.
  std::vector<std::size_t> order(cone.rays.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cone.rays[a] < cone.rays[b]; });
  ConeRays sorted;
  for (std::size_t i : order) {
    sorted.rays.push_back(std::move(cone.rays[i]));
    sorted.zero_sets.push_back(std::move(cone.zero_sets[i]));
  }
  return sorted;
}

std::vector<RVector> standard_form_vertices(const RMatrix& e, const RVector& g, std::size_t n,
                                            const DdOptions& options) {
  const auto x0 = solve_particular(e, g, n);
  if (!x0) return {};
  const RMatrix basis = nullspace(e, n);
  const std::size_t d = basis.size();

  // Homogenized cone over (lambda, y): lambda x0 + N y >= 0 and lambda >= 0.
  std::vector<IVector> rows;
  rows.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    RVector row(d + 1);
    row[0] = (*x0)[k];
    for (std::size_t j = 0; j < d; ++j) row[j + 1] = basis[j][k];
    rows.push_back(primitive_integer_vector(row));
  }
  IVector lambda_row(d + 1, BigInt(0));
  lambda_row[0] = 1;
  rows.push_back(std::move(lambda_row));

  const ConeRays cone = extreme_rays(rows, d + 1, options);
  std::vector<RVector> vertices;
  for (const auto& ray : cone.rays) {
    if (ray[0] == 0) throw Error("polytope is unbounded");
    RVector x(n);
    const Rational lambda(ray[0]);
    for (std::size_t k = 0; k < n; ++k) {
      Rational v = (*x0)[k];
      for (std::size_t j = 0; j < d; ++j) {
        if (ray[j + 1] != 0 && basis[j][k] != 0) v += basis[j][k] * Rational(ray[j + 1]) / lambda;
      }
      x[k] = v;
    }
    vertices.push_back(std::move(x));
  }
  return vertices;
}

}  // namespace boxworld
