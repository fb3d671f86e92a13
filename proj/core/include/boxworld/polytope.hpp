#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "boxworld/behavior.hpp"
#include "boxworld/exact_linalg.hpp"

namespace boxworld {

enum class VertexTag { LocalDeterministic, Nonlocal, Other };

std::string to_string(VertexTag tag);

struct Vertex {
  Behavior behavior;
  VertexTag tag;
};

struct PolytopeOptions {
  std::size_t max_ambient = 64;  ///< enumeration refuses scenarios with more table entries
  std::string cache_dir;         ///< vertex-set cache; empty disables caching
};

/// The non-signaling polytope of a scenario.
///
/// The H-description is {x >= 0, E x = g}: E stacks per-input normalization and
/// every no-signaling equality; x <= 1 follows from normalization. Vertices are
/// enumerated on first use and cached; the object is safe to share between threads.
class NsPolytope {
 public:
  explicit NsPolytope(Scenario scenario, PolytopeOptions options = {});

  const Scenario& scenario() const { return scenario_; }
  std::size_t ambient_dimension() const { return scenario_.total_entries(); }
  long dimension() const;

  const RMatrix& equalities() const { return eq_; }
  const RVector& equality_rhs() const { return eq_rhs_; }
  std::size_t equality_rank() const { return eq_rank_; }

  /// Inequality form A x <= b with bounds 0 <= x <= 1 and each independent
  /// equality as a pair of opposite rows.
  std::pair<RMatrix, RVector> inequality_system() const;
  /// Row count of inequality_system(); exposed for inspection, not claimed minimal.
  std::size_t h() const;

  /// Complete vertex list in canonical order (tag, then table descending).
  /// Throws TooLarge when the scenario exceeds the ambient cap.
  const std::vector<Vertex>& vertices() const;

  /// Exact H-description membership.
  bool contains(const Behavior& point) const;

  /// Rank of the equalities plus tight x >= 0 rows equals t.
  bool is_vertex(const Behavior& point) const;

  /// Membership in the hull of the deterministic behaviors (exact LP).
  bool local_contains(const Behavior& point) const;

  /// min lambda with P = lambda Q + (1 - lambda) L, Q in the polytope, L local.
  Rational nonlocality_cost(const Behavior& point) const;

 private:
  void check_scenario(const Behavior& point) const;

  Scenario scenario_;
  PolytopeOptions options_;
  RMatrix eq_;
  RVector eq_rhs_;
  std::size_t eq_rank_ = 0;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// dim = prod_i (sum_j (v_ij - 1) + 1) - 1.
long ns_dimension(const Scenario& scenario);

/// All deterministic behaviors in lexicographic order of their assignments.
std::vector<Behavior> deterministic_behaviors(const Scenario& scenario);

bool is_deterministic(const Behavior& behavior);

/// Weights w >= 0 with sum w = 1 and sum w_i points[i] = target, or nullopt.
std::optional<RVector> convex_weights(const std::vector<Behavior>& points, const Behavior& target);

/// Vertex order used everywhere: tag first, then table lexicographically descending.
bool canonical_vertex_less(const Vertex& a, const Vertex& b);

}  // namespace boxworld
