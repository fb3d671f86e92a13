#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boxworld/ensembles.hpp"
#include "boxworld/simplex.hpp"

namespace boxworld {

/// Extension of `base` by one extra party E (appended last). Input z = k of E
/// realizes ensembles[k]: P(a, e=i | x, z=k) = w_i V_i(a|x).
struct CompleteExtension {
  Behavior base;
  Behavior extension;
  std::vector<Ensemble> ensembles;

  std::size_t extending_party() const { return base.scenario().parties(); }
};

CompleteExtension nsce(const Behavior& base, const NsPolytope& polytope);
CompleteExtension nsce(const Behavior& base, const PolytopeOptions& options = {});

/// Assembles the extension table from an explicit ensemble list (any order).
CompleteExtension extension_from_ensembles(const Behavior& base, std::vector<Ensemble> ensembles);

/// Re-derives the minimal ensembles of the base independently and checks that
/// each is produced exactly by some input of E, and that the A-marginal is the base.
bool verify_access(const CompleteExtension& ce, const PolytopeOptions& options = {});

/// Conditional ensemble prepared by input z of the extending party (zero-weight outcomes dropped).
std::vector<std::pair<Rational, Behavior>> prepared_ensemble(const CompleteExtension& ce, std::size_t z);

/// Local wiring on the extending system: input z' picks z with p(z|z'), then
/// maps outcome e of z to e' with p(e'|e,z,z').
struct Wiring {
  std::vector<std::vector<Rational>> input_map;                           ///< [z'][z]
  std::vector<std::vector<std::vector<std::vector<Rational>>>> output_map;  ///< [z'][z][e][e']
};

struct GenerationResult {
  bool feasible = false;
  Wiring wiring;
  std::size_t failed_input = 0;  ///< z' whose LP was infeasible
  RVector farkas;                ///< certificate for that z'
};

/// The full GENERATION LP for target input z' (dense; meant for small cases and
/// for checking certificates). Columns: s_z, then r[z][e][e'] = s_z p(e'|e,z,z').
LinearProgram generation_lp(const CompleteExtension& ce, const Behavior& target, std::size_t target_input);

/// Solves (id_A x T)(ce.extension) = target for a wiring T, one exact LP per z'.
/// Variables forced to zero by zero target entries are removed before solving;
/// an infeasibility certificate is returned for the full LP of generation_lp.
/// The target's last party is E'; its other parties must match the base.
GenerationResult generate_extension(const CompleteExtension& ce, const Behavior& target);

/// (id_A x T)(extension) on a target scenario whose E' outputs are `output_counts`.
Behavior apply_wiring(const CompleteExtension& ce, const Wiring& wiring);

struct DimBound {
  long dim_b = 0;                  ///< dimension of the base polytope
  std::size_t t = 0;               ///< table length of the base scenario
  BigInt vertex_bound;             ///< bound on the number of minimal-ensemble supports
  BigInt bound;                    ///< strict upper bound on the NSCE polytope dimension
  std::size_t caratheodory_cap = 0;  ///< outputs per extending input never exceed dim + 1
};

/// (dim+1) * (C(V, dim+1) * dim + 1) with
/// V = C(2t - floor(t/2) - dim, floor(t/2)) + C(3t - floor(t/2) - (dim+1), t - floor(t/2) - 1).
DimBound nsce_dim_bound(const Scenario& scenario);

struct MirrorReport {
  bool reconstructs = false;
  std::string detail;
};

/// Builds the NSCE of the extending party's marginal and compares it with the
/// original extension after swapping the roles of base and extending party.
/// Diagnostic only, defined for single-party bases with a nontrivial extension.
MirrorReport mirror_diagnostic(const CompleteExtension& ce, const PolytopeOptions& options = {});

}  // namespace boxworld
