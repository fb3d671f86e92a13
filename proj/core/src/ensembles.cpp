#include "boxworld/ensembles.hpp"

#include <algorithm>

#include "boxworld/error.hpp"
#include "boxworld/vertex_enum.hpp"

namespace boxworld {

std::vector<std::size_t> Ensemble::support() const {
  std::vector<std::size_t> s;
  for (const auto& m : members) s.push_back(m.vertex);
  return s;
}

std::vector<Rational> Ensemble::weights() const {
  std::vector<Rational> w;
  for (const auto& m : members) w.push_back(m.weight);
  return w;
}

Behavior Ensemble::mixture() const {
  std::vector<Behavior> bs;
  for (const auto& m : members) bs.push_back(m.behavior);
  const auto w = weights();
  return combine(w, bs);
}

std::vector<Ensemble> minimal_ensembles(const Behavior& target, const NsPolytope& polytope) {
  if (!(target.scenario() == polytope.scenario())) throw ShapeError("behavior and polytope scenarios differ");
  require_valid(target);
  const auto& verts = polytope.vertices();
  const std::size_t n = verts.size();
  const std::size_t t = target.size();

  RMatrix e(t + 1, RVector(n));
  RVector g = target.table();
  g.push_back(1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < t; ++k) e[k][j] = verts[j].behavior[k];
    e[t][j] = 1;
  }

  std::vector<Ensemble> out;
  for (const auto& w : standard_form_vertices(e, g, n)) {
    Ensemble ens;
    RMatrix columns;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] == 0) continue;
      ens.members.push_back({w[j], j, verts[j].behavior});
      RVector col = verts[j].behavior.table();
      col.push_back(1);
      columns.push_back(std::move(col));
    }
    if (rank(columns, t + 1) != columns.size()) {
      throw AmbiguousEnsemble("affinely dependent minimal support", ens.support());
    }
    out.push_back(std::move(ens));
  }
  std::sort(out.begin(), out.end(),
            [](const Ensemble& a, const Ensemble& b) { return a.support() < b.support(); });
  return out;
}

std::vector<Ensemble> minimal_ensembles(const Behavior& target, const PolytopeOptions& options) {
  return minimal_ensembles(target, NsPolytope(target.scenario(), options));
}

bool reconstructs(const Ensemble& ensemble, const Behavior& target) {
  if (ensemble.members.empty()) return false;
  Rational total = 0;
  for (const auto& m : ensemble.members) {
    if (m.weight <= 0) return false;
    total += m.weight;
  }
  return total == 1 && ensemble.mixture() == target;
}

bool is_subset_minimal(const Ensemble& ensemble, const Behavior& target) {
  const std::size_t k = ensemble.members.size();
  if (k <= 1) return true;
  // Hull membership is monotone in the support, so dropping one member at a time suffices.
  for (std::size_t skip = 0; skip < k; ++skip) {
    std::vector<Behavior> rest;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != skip) rest.push_back(ensemble.members[i].behavior);
    }
    if (convex_weights(rest, target)) return false;
  }
  return true;
}

}  // namespace boxworld
