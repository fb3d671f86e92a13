#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "boxworld/rational.hpp"
#include "boxworld/scenario.hpp"

namespace boxworld {

/// Exact conditional probability table p(a|x) over a Scenario.
///
/// Construction only checks the shape; use validate() for normalization and
/// no-signaling. Values are immutable once built.
class Behavior {
 public:
  Behavior(Scenario scenario, std::vector<Rational> table);

  const Scenario& scenario() const { return scenario_; }
  const std::vector<Rational>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }

  const Rational& operator[](std::size_t flat) const { return table_[flat]; }
  const Rational& at(std::span<const std::size_t> x, std::span<const std::size_t> a) const;
  const Rational& at(std::initializer_list<std::size_t> x, std::initializer_list<std::size_t> a) const;

  std::vector<double> to_doubles() const;

  bool operator==(const Behavior& other) const = default;

 private:
  Scenario scenario_;
  std::vector<Rational> table_;
};

struct Violation {
  enum class Kind { Range, Normalization, Signaling };
  Kind kind;
  std::size_t party = 0;  ///< signaling party, or 0 for other kinds
  std::string detail;     ///< names the fixed indices of the constraint
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks 0 <= p <= 1, per-input normalization and every no-signaling equality exactly.
ValidationReport validate(const Behavior& behavior);
void require_valid(const Behavior& behavior);

/// Marginal on `kept` parties (returned in increasing party order).
Behavior marginal(const Behavior& behavior, std::span<const std::size_t> kept);
Behavior marginal(const Behavior& behavior, std::initializer_list<std::size_t> kept);

/// p((a,a')|(x,x')) = p(a|x) q(a'|x') on the concatenated scenario.
Behavior tensor(const Behavior& p, const Behavior& q);

/// weight * p + (1 - weight) * q on a common scenario.
Behavior mix(const Rational& weight, const Behavior& p, const Behavior& q);

/// Sum_i weights[i] * members[i]; weights need not be normalized.
Behavior combine(std::span<const Rational> weights, std::span<const Behavior> members);

/// Uniform table p(a|x) = 1 / prod_i v_{i,x_i}.
Behavior uniform(const Scenario& scenario);

/// Deterministic behavior with outcome `assignment[i][j]` for input j of party i.
Behavior deterministic(const Scenario& scenario, const std::vector<std::vector<std::size_t>>& assignment);

/// PR box: p(ab|xy) = 1/2 iff a xor b = xy.
Behavior pr_box();
/// Anti-PR box: p(ab|xy) = 1/2 iff a xor b = xy xor 1.
Behavior anti_pr_box();
/// Local deterministic (2,2,2,2) vertex with a = alpha x xor beta, b = gamma y xor sigma.
Behavior local_vertex(int alpha, int beta, int gamma, int sigma);
/// Nonlocal (2,2,2,2) vertex with p = 1/2 iff a xor b = xy xor rx xor sy xor t.
Behavior nonlocal_vertex(int r, int s, int t);
/// Single-party, two binary inputs, uniform outputs.
Behavior maximally_mixed_bit();

/// (1 - eps) PR + eps anti-PR, for 0 <= eps <= 1.
Behavior iso(const Rational& eps);

/// S = sum_xy (-1)^{xy} E(x,y) with E(x,y) = sum_ab (-1)^{a xor b} p(ab|xy).
Rational chsh(const Behavior& behavior);

/// Relabels the inputs and outputs of one party. The relabeled behavior q
/// satisfies q(.., output_perms[x][a], ..|.., input_perm[x], ..) = p(.., a, ..|.., x, ..).
Behavior relabel(const Behavior& behavior, std::size_t party, std::span<const std::size_t> input_perm,
                 const std::vector<std::vector<std::size_t>>& output_perms);

/// Moves party order[k] of the input to position k of the result.
Behavior reorder_parties(const Behavior& behavior, std::span<const std::size_t> order);

/// Searches all input and output relabelings of `party` mapping `p` onto `q`.
bool equal_up_to_relabeling(const Behavior& p, const Behavior& q, std::size_t party);

}  // namespace boxworld
