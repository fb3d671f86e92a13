#pragma once

#include <string>
#include <vector>

namespace boxworld {

/// Upper-bound curve sampled on a strictly increasing parameter grid.
struct BoundCurve {
  std::vector<double> param;
  std::vector<double> value;
  std::string label;

  /// Throws unless lengths match, the grid strictly increases and values are finite.
  void check() const;
  /// Piecewise-linear value at p; p must lie inside the grid.
  double at(double p) const;
};

/// Pointwise minimum of all curves on the union grid restricted to the common
/// domain, followed by its lower convex hull evaluated back on that grid.
BoundCurve lower_convex_hull(const std::vector<BoundCurve>& curves);

/// Reads `param,value` rows; lines starting with '#' and a non-numeric header are skipped.
BoundCurve read_curve_csv(const std::string& path);

}  // namespace boxworld
