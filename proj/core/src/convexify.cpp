#include "boxworld/convexify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "boxworld/error.hpp"

namespace boxworld {

void BoundCurve::check() const {
  if (param.size() != value.size()) throw ShapeError("curve '" + label + "': grid and values differ in length");
  if (param.empty()) throw ShapeError("curve '" + label + "' is empty");
  for (std::size_t i = 0; i < param.size(); ++i) {
    if (!std::isfinite(param[i]) || !std::isfinite(value[i]))
      throw PreconditionError("curve '" + label + "' has a non-finite entry");
    if (i > 0 && !(param[i] > param[i - 1]))
      throw PreconditionError("curve '" + label + "' grid is not strictly increasing");
  }
}

double BoundCurve::at(double p) const {
  if (p < param.front() || p > param.back())
    throw PreconditionError("curve '" + label + "' queried outside its domain; extrapolation is refused");
  auto it = std::lower_bound(param.begin(), param.end(), p);
  const std::size_t i = static_cast<std::size_t>(it - param.begin());
  if (param[i] == p) return value[i];
  const double t = (p - param[i - 1]) / (param[i] - param[i - 1]);
  return value[i - 1] + t * (value[i] - value[i - 1]);
}

namespace {

double cross(double ox, double oy, double ax, double ay, double bx, double by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

}  // namespace

BoundCurve lower_convex_hull(const std::vector<BoundCurve>& curves) {
  if (curves.empty()) throw PreconditionError("convexify needs at least one curve");
  double lo = -INFINITY, hi = INFINITY;
  for (const auto& c : curves) {
    c.check();
    lo = std::max(lo, c.param.front());
    hi = std::min(hi, c.param.back());
  }
  if (lo > hi) throw PreconditionError("curve domains do not overlap");

  std::vector<double> grid;
  for (const auto& c : curves)
    for (double p : c.param)
      if (p >= lo && p <= hi) grid.push_back(p);
  grid.push_back(lo);
  grid.push_back(hi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> low(grid.size(), INFINITY);
  for (const auto& c : curves)
    for (std::size_t i = 0; i < grid.size(); ++i) low[i] = std::min(low[i], c.at(grid[i]));

  // Andrew's monotone chain, lower half; grid is already sorted by x.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      if (cross(grid[a], low[a], grid[b], low[b], grid[i], low[i]) <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  BoundCurve out;
  out.label = "lower-convex-hull";
  out.param = grid;
  out.value.resize(grid.size());
  std::size_t seg = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    while (seg + 1 < hull.size() && hull[seg + 1] < i) ++seg;
    const std::size_t a = hull[seg];
    if (a == i || seg + 1 == hull.size()) {
      out.value[i] = low[i];
      continue;
    }
    const std::size_t b = hull[seg + 1];
    if (b == i) {
      out.value[i] = low[i];
      continue;
    }
    const double t = (grid[i] - grid[a]) / (grid[b] - grid[a]);
    out.value[i] = low[a] + t * (low[b] - low[a]);
  }
  return out;
}

BoundCurve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  BoundCurve curve;
  curve.label = path;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',')) throw ShapeError("malformed CSV row in '" + path + "'");
    try {
      std::size_t used_a = 0, used_b = 0;
      const double p = std::stod(a, &used_a);
      const double v = std::stod(b, &used_b);
      curve.param.push_back(p);
      curve.value.push_back(v);
    } catch (const std::invalid_argument&) {
      if (curve.param.empty()) continue;  // header row
      throw ShapeError("non-numeric CSV row in '" + path + "'");
    }
  }
  curve.check();
  return curve;
}

}  // namespace boxworld
