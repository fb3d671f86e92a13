#pragma once

#include <cstddef>

#include "boxworld/exact_linalg.hpp"

namespace boxworld {

/// minimize c.x subject to A x = b, x >= 0, over exact rationals.
struct LinearProgram {
  RMatrix a;
  RVector b;
  RVector c;  ///< empty means a pure feasibility problem
  std::size_t variables = 0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RVector x;            ///< optimal basic solution when Optimal
  Rational objective;   ///< c.x when Optimal
  /// When Infeasible: y with A^T y >= 0 and b.y < 0, which proves no x >= 0 solves A x = b.
  RVector farkas;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex with Bland's rule (terminates on degenerate problems).
LpResult solve_lp(const LinearProgram& lp);

/// Checks a Farkas certificate exactly against the problem data.
bool verify_farkas(const LinearProgram& lp, const RVector& y);

}  // namespace boxworld
