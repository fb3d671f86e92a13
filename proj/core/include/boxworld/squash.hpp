#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "boxworld/behavior.hpp"
#include "boxworld/distribution.hpp"
#include "boxworld/intrinsic.hpp"
#include "boxworld/polytope.hpp"

namespace boxworld {

/// Eve's measurement on the device: input z drawn with the listed weights, raw
/// outcome the pair (z, e) enumerated in listing order, then an optional channel
/// from that raw alphabet to F.
struct EveStrategy {
  std::vector<std::pair<std::size_t, double>> mixture;  ///< (z, p(z)), weights summing to 1
  std::optional<StochasticChannel> channel;             ///< absent: F is the raw (z, e) alphabet

  static EveStrategy pure(std::size_t z) { return {{{z, 1.0}}, std::nullopt}; }
  std::string summary() const;
};

/// P(a,b,f) = sum_z p(z) sum_e Q(a,b,e|x,y,z) p(f|z,e) for a device on parties (A, B, E).
/// The device is assumed valid; only indices are checked.
TripartiteDistribution measure_device(const Behavior& device, std::size_t x, std::size_t y,
                                      const EveStrategy& strategy);

enum class Quantifier { MutualInformation, ConditionalMutualInformation, Intrinsic };

std::string to_string(Quantifier q);
Quantifier parse_quantifier(const std::string& name);

using QuantifierFn = std::function<double(const TripartiteDistribution&)>;

struct SquashConfig {
  IntrinsicConfig intrinsic;
  std::size_t top_k = 8;          ///< pure strategies paired into z-mixtures
  std::size_t mixture_steps = 16; ///< mixture weights alpha = k / steps
  bool mixtures = true;
  std::size_t refine = 3;         ///< screened strategies given the full intrinsic search
};

struct SquashResult {
  double value = 0;
  std::size_t x = 0, y = 0;  ///< maximizing honest inputs
  EveStrategy witness;       ///< Eve's best strategy at (x, y)
  bool mixture_won = false;  ///< a strict z-mixture beat every pure z at (x, y)
  std::vector<double> per_input;  ///< min over Eve for each (x, y), x major
};

/// max over direct (x, y) of min over searched Eve strategies of quantifier(P(a,b,f)).
SquashResult squash(const QuantifierFn& quantifier, const Behavior& device, const SquashConfig& config = {});

/// Named quantifier. For Intrinsic the z-mixture search screens strategies with
/// the merge-path estimate and runs the full channel search on the best few.
SquashResult squash(Quantifier quantifier, const Behavior& device, const SquashConfig& config = {});

/// squash(Intrinsic) on the NSCE device of a bipartite behavior.
SquashResult squashed_nonlocality(const Behavior& behavior, const SquashConfig& config = {},
                                  const PolytopeOptions& options = {});

/// Squashed conditional mutual information on the NSCE device, computed without
/// building it: for fixed (x, y) the minimum over pure z of I(A:B|E) is the LP
///   min sum_j w_j I_j(x,y)  s.t.  sum_j w_j V_j = P, w >= 0,
/// where I_j(x,y) is the mutual information of vertex j at (x, y). The LP
/// optimum sits on a minimal ensemble, so the two agree.
SquashResult squash_cmi_lp(const Behavior& behavior, const NsPolytope& polytope);

}  // namespace boxworld
