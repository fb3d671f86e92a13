#pragma once

#include <cstddef>

namespace boxworld {

/// Binary Shannon entropy in bits; h(0) = h(1) = 0.
double binary_entropy(double p);

/// Total scheme memory M = delta * log2(d_k d_s): the hub stores one half of each link.
double scheme_memory(std::size_t dk, std::size_t ds, std::size_t delta);

/// delta log2(d_k d_s) (1 - 1 / (2 - theta / log2 d_k)); requires 0 <= theta < log2 d_k.
double thm1_overhead(std::size_t dk, std::size_t ds, double theta, std::size_t delta);

/// (d_k - 1) / eps; requires eps > 0.
double lemma1_shield_bound(std::size_t dk, double eps);

struct Lemma2Bounds {
  double shield_bound;          ///< ((d_k - 1) / eps) (1 - eps d_k)
  double trace_distance_bound;  ///< (d_k - 1) / (d_s + d_k (d_k - 1))
};

/// Requires 0 < eps < 1 / d_k.
Lemma2Bounds lemma2_bounds(std::size_t dk, std::size_t ds, double eps);

/// Minimum trace distance (d_k - 1) / (d_s + d_k (d_k - 1)) of any PPT state from a pdit.
double corollary_trace_distance(std::size_t dk, std::size_t ds);

struct OverheadBound {
  double v;      ///< lower bound on the memory overhead
  double theta;  ///< upper bound on the repeatable key
  double eta;    ///< lower bound on the distillable key
};

/// V = M (1 - log2 d_k / (log2 d_k + log2((d_k - 1) / eps))), theta = 2 log2(1 + eps), eta = log2 d_k.
OverheadBound thm3_overhead(std::size_t dk, std::size_t ds, double eps, double m);

/// V = M (1 - eps/2 - f), with every logarithm base 2:
///   f   = [log d_k + (1 + eps/2) h((eps/2) / (1 + eps/2))] / [log d_k + log((d_k - 1)/eps) + log(1 - eps d_k)]
///   eta = log d_k - 8 eps log d_k - 4 h(eps)
///   theta = 2 (sqrt eps + eps) log dimH + (1 + 2 sqrt eps + 2 eps) h((sqrt eps + eps) / (1/2 + sqrt eps + eps))
/// Domain: (d_k - 1)/(d_s + d_k(d_k - 1)) <= eps < 1/d_k, and the denominator of f
/// positive, i.e. eps < d_k (d_k - 1) / (1 + d_k^2 (d_k - 1)). dimH = 0 selects (d_k d_s)^2.
OverheadBound thm5_overhead(std::size_t dk, std::size_t ds, double eps, double m, std::size_t dim_h = 0);

/// Admissible eps interval [lo, hi) of thm5_overhead.
struct EpsRange {
  double lo;
  double hi;
};
EpsRange thm5_domain(std::size_t dk, std::size_t ds);

/// q eta1 eta2.
double mdi_capacity(double q, double eta1, double eta2);
/// min(eta1, eta2).
double repeaterless_bound(double eta1, double eta2);
/// exp(-alpha L).
double transmittance(double distance_km, double alpha_per_km);

}  // namespace boxworld
