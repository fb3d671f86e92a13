#include "boxworld/overhead.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "boxworld/error.hpp"

namespace boxworld {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_dims(std::size_t dk, std::size_t ds) {
  require(dk >= 2, "d_k >= 2 violated");
  require(ds >= 1, "d_s >= 1 violated");
}

void check_unit(double v, const char* name) {
  require(std::isfinite(v) && v >= 0 && v <= 1, std::string(name) + " in [0,1] violated (got " + num(v) + ")");
}

}  // namespace

double binary_entropy(double p) {
  require(p >= 0 && p <= 1, "binary entropy argument outside [0,1]");
  if (p == 0 || p == 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double scheme_memory(std::size_t dk, std::size_t ds, std::size_t delta) {
  check_dims(dk, ds);
  require(delta >= 1, "hub degree >= 1 violated");
  return static_cast<double>(delta) * std::log2(static_cast<double>(dk * ds));
}

double thm1_overhead(std::size_t dk, std::size_t ds, double theta, std::size_t delta) {
  check_dims(dk, ds);
  require(delta >= 1, "hub degree >= 1 violated");
  const double lk = std::log2(static_cast<double>(dk));
  require(theta >= 0, "theta >= 0 violated (got " + num(theta) + ")");
  require(theta < lk, "theta < log2 d_k violated (got " + num(theta) + " >= " + num(lk) + ")");
  return static_cast<double>(delta) * std::log2(static_cast<double>(dk * ds)) * (1 - 1 / (2 - theta / lk));
}

double lemma1_shield_bound(std::size_t dk, double eps) {
  require(dk >= 2, "d_k >= 2 violated");
  require(eps > 0, "eps > 0 violated (got " + num(eps) + ")");
  return static_cast<double>(dk - 1) / eps;
}

Lemma2Bounds lemma2_bounds(std::size_t dk, std::size_t ds, double eps) {
  check_dims(dk, ds);
  const double k = static_cast<double>(dk);
  require(eps > 0, "eps > 0 violated (got " + num(eps) + ")");
  require(eps < 1 / k, "eps < 1/d_k violated (got " + num(eps) + ")");
  return {((k - 1) / eps) * (1 - eps * k), corollary_trace_distance(dk, ds)};
}

double corollary_trace_distance(std::size_t dk, std::size_t ds) {
  check_dims(dk, ds);
  const double k = static_cast<double>(dk);
  return (k - 1) / (static_cast<double>(ds) + k * (k - 1));
}

OverheadBound thm3_overhead(std::size_t dk, std::size_t ds, double eps, double m) {
  check_dims(dk, ds);
  require(eps > 0 && eps < 1, "eps in (0,1) violated (got " + num(eps) + ")");
  require(m >= 0, "M >= 0 violated");
  const double lk = std::log2(static_cast<double>(dk));
  const double v = m * (1 - lk / (lk + std::log2(static_cast<double>(dk - 1) / eps)));
  return {v, 2 * std::log2(1 + eps), lk};
}

EpsRange thm5_domain(std::size_t dk, std::size_t ds) {
  check_dims(dk, ds);
  const double k = static_cast<double>(dk);
  const double pole = k * (k - 1) / (1 + k * k * (k - 1));
  return {corollary_trace_distance(dk, ds), std::min(1 / k, pole)};
}

OverheadBound thm5_overhead(std::size_t dk, std::size_t ds, double eps, double m, std::size_t dim_h) {
  check_dims(dk, ds);
  require(m >= 0, "M >= 0 violated");
  const double k = static_cast<double>(dk);
  const double lo = corollary_trace_distance(dk, ds);
  require(eps >= lo, "(d_k-1)/(d_s+d_k(d_k-1)) <= eps violated (" + num(lo) + " > " + num(eps) + ")");
  require(eps < 1 / k, "eps < 1/d_k violated (got " + num(eps) + ")");
  const double lk = std::log2(k);
  const double half = eps / 2;
  const double numerator = lk + (1 + half) * binary_entropy(half / (1 + half));
  const double denominator = lk + std::log2((k - 1) / eps) + std::log2(1 - eps * k);
  require(denominator > 0, "positive denominator of f violated at eps=" + num(eps));
  const double f = numerator / denominator;

  const double dh = dim_h == 0 ? static_cast<double>(dk * dk * ds * ds) : static_cast<double>(dim_h);
  const double r = std::sqrt(eps);
  const double theta =
      2 * (r + eps) * std::log2(dh) + (1 + 2 * r + 2 * eps) * binary_entropy((r + eps) / (0.5 + r + eps));
  const double eta = lk - 8 * eps * lk - 4 * binary_entropy(eps);
  return {m * (1 - half - f), theta, eta};
}

double mdi_capacity(double q, double eta1, double eta2) {
  check_unit(q, "q");
  check_unit(eta1, "eta1");
  check_unit(eta2, "eta2");
  return q * eta1 * eta2;
}

double repeaterless_bound(double eta1, double eta2) {
  check_unit(eta1, "eta1");
  check_unit(eta2, "eta2");
  return std::min(eta1, eta2);
}

double transmittance(double distance_km, double alpha_per_km) {
  require(distance_km >= 0, "distance >= 0 violated");
  require(alpha_per_km >= 0, "alpha >= 0 violated");
  return std::exp(-alpha_per_km * distance_km);
}

}  // namespace boxworld
