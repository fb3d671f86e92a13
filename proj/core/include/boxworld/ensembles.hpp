#pragma once

#include <cstddef>
#include <vector>

#include "boxworld/behavior.hpp"
#include "boxworld/polytope.hpp"

namespace boxworld {

struct EnsembleMember {
  Rational weight;     ///< strictly positive
  std::size_t vertex;  ///< index into the polytope's canonical vertex list
  Behavior behavior;
};

/// Convex decomposition of a behavior into polytope vertices, members sorted by vertex index.
struct Ensemble {
  std::vector<EnsembleMember> members;
  bool minimal = true;

  std::vector<std::size_t> support() const;
  std::vector<Rational> weights() const;
  /// sum_i w_i member_i.
  Behavior mixture() const;
};

/// All minimal ensembles of `target`, ordered lexicographically by support.
///
/// Minimal supports are exactly the vertices of
///   W = {w >= 0 : sum_j w_j = 1, sum_j w_j V_j = target},
/// because a support is minimal iff its vertices are affinely independent,
/// which in turn makes w a basic solution. W is enumerated exactly. An
/// affinely dependent support would throw AmbiguousEnsemble.
std::vector<Ensemble> minimal_ensembles(const Behavior& target, const NsPolytope& polytope);
std::vector<Ensemble> minimal_ensembles(const Behavior& target, const PolytopeOptions& options = {});

/// sum w = 1, all w > 0 and the mixture reproduces `target`, exactly.
bool reconstructs(const Ensemble& ensemble, const Behavior& target);

/// No proper subset of the support still contains `target` in its hull (checked by LP).
bool is_subset_minimal(const Ensemble& ensemble, const Behavior& target);

}  // namespace boxworld
