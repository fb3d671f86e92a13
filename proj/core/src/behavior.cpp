#include "boxworld/behavior.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "boxworld/error.hpp"

namespace boxworld {

Behavior::Behavior(Scenario scenario, std::vector<Rational> table)
    : scenario_(std::move(scenario)), table_(std::move(table)) {
  if (table_.size() != scenario_.total_entries()) {
    throw ShapeError("table has " + std::to_string(table_.size()) + " entries, scenario " + scenario_.to_string() +
                     " needs " + std::to_string(scenario_.total_entries()));
  }
}

const Rational& Behavior::at(std::span<const std::size_t> x, std::span<const std::size_t> a) const {
  return table_[scenario_.entry(x, a)];
}

const Rational& Behavior::at(std::initializer_list<std::size_t> x, std::initializer_list<std::size_t> a) const {
  return table_[scenario_.entry(x, a)];
}

std::vector<double> Behavior::to_doubles() const {
  std::vector<double> out;
  out.reserve(table_.size());
  for (const auto& r : table_) out.push_back(to_double(r));
  return out;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].detail;
  }
  return os.str();
}

namespace {

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += std::to_string(x);
  return s.empty() ? "-" : s;
}

/// Sums of p(a|x) over a_party, indexed by the remaining outputs in lexicographic order.
std::vector<Rational> sums_over_party(const Behavior& b, std::size_t input_tuple, std::size_t party) {
  const Scenario& sc = b.scenario();
  const auto x = sc.decode_inputs(input_tuple);
  const std::size_t offset = sc.block_offset(input_tuple);
  const std::size_t block = sc.block_size(input_tuple);
  const std::size_t vp = sc.outputs(party, x[party]);
  std::vector<Rational> sums(block / vp);
  for (std::size_t k = 0; k < block; ++k) {
    const auto a = sc.decode_outputs(input_tuple, k);
    std::size_t rest = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == party) continue;
      rest = rest * sc.outputs(i, x[i]) + a[i];
    }
    sums[rest] += b[offset + k];
  }
  return sums;
}

void check_same_scenario(const Behavior& p, const Behavior& q) {
  if (!(p.scenario() == q.scenario()))
    throw ShapeError("scenario mismatch: " + p.scenario().to_string() + " vs " + q.scenario().to_string());
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n, const std::string& what) {
  if (perm.size() != n) throw ShapeError(what + " has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) throw ShapeError(what + " is not a permutation");
    seen[v] = true;
  }
}

const Scenario& bell_2222() {
  static const Scenario sc = Scenario::bipartite(2, 2, 2, 2);
  return sc;
}

}  // namespace

ValidationReport validate(const Behavior& b) {
  ValidationReport report;
  const Scenario& sc = b.scenario();
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] < 0 || b[k] > 1) {
      report.violations.push_back({Violation::Kind::Range, 0,
                                   "entry " + std::to_string(k) + " = " + format_rational(b[k]) + " outside [0,1]"});
    }
  }
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
    Rational total = 0;
    for (std::size_t k = 0; k < sc.block_size(xi); ++k) total += b[sc.block_offset(xi) + k];
    if (total != 1) {
      report.violations.push_back({Violation::Kind::Normalization, 0,
                                   "normalization at x=" + tuple_string(sc.decode_inputs(xi)) + " sums to " +
                                       format_rational(total)});
    }
  }
  for (std::size_t party = 0; party < sc.parties(); ++party) {
    if (sc.inputs(party) < 2) continue;
    for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
      auto x = sc.decode_inputs(xi);
      if (x[party] == 0) continue;
      auto x0 = x;
      x0[party] = 0;
      const auto here = sums_over_party(b, xi, party);
      const auto base = sums_over_party(b, sc.encode_inputs(x0), party);
      for (std::size_t r = 0; r < here.size(); ++r) {
        if (here[r] != base[r]) {
          auto others = x;
          others.erase(others.begin() + static_cast<std::ptrdiff_t>(party));
          report.violations.push_back(
              {Violation::Kind::Signaling, party,
               "signaling by party " + std::to_string(party) + ": inputs " + std::to_string(x[party]) + " vs 0 " +
                   "differ at other inputs " + tuple_string(others) + ", other outputs #" + std::to_string(r)});
        }
      }
    }
  }
  return report;
}

void require_valid(const Behavior& behavior) {
  auto report = validate(behavior);
  if (!report.ok()) throw InvalidBehavior(report.summary());
}

Behavior marginal(const Behavior& b, std::span<const std::size_t> kept) {
  require_valid(b);
  const Scenario& sc = b.scenario();
  Scenario reduced = sc.restrict_to(kept);
  std::vector<std::size_t> parties(kept.begin(), kept.end());
  std::sort(parties.begin(), parties.end());

  std::vector<Rational> table(reduced.total_entries());
  for (std::size_t ri = 0; ri < reduced.input_tuples(); ++ri) {
    const auto rx = reduced.decode_inputs(ri);
    std::vector<std::size_t> x(sc.parties(), 0);
    for (std::size_t j = 0; j < parties.size(); ++j) x[parties[j]] = rx[j];
    const std::size_t xi = sc.encode_inputs(x);
    for (std::size_t k = 0; k < sc.block_size(xi); ++k) {
      const auto a = sc.decode_outputs(xi, k);
      std::vector<std::size_t> ra(parties.size());
      for (std::size_t j = 0; j < parties.size(); ++j) ra[j] = a[parties[j]];
      table[reduced.entry(rx, ra)] += b[sc.block_offset(xi) + k];
    }
  }
  return Behavior(std::move(reduced), std::move(table));
}

Behavior marginal(const Behavior& b, std::initializer_list<std::size_t> kept) {
  return marginal(b, std::span<const std::size_t>(kept.begin(), kept.size()));
}

Behavior tensor(const Behavior& p, const Behavior& q) {
  const Scenario& sp = p.scenario();
  const Scenario& sq = q.scenario();
  Scenario joint = sp.concat(sq);
  std::vector<Rational> table(joint.total_entries());
  for (std::size_t xp = 0; xp < sp.input_tuples(); ++xp) {
    for (std::size_t xq = 0; xq < sq.input_tuples(); ++xq) {
      const std::size_t xi = xp * sq.input_tuples() + xq;
      const std::size_t off = joint.block_offset(xi);
      const std::size_t nq = sq.block_size(xq);
      for (std::size_t ap = 0; ap < sp.block_size(xp); ++ap) {
        for (std::size_t aq = 0; aq < nq; ++aq) {
          table[off + ap * nq + aq] = p[sp.block_offset(xp) + ap] * q[sq.block_offset(xq) + aq];
        }
      }
    }
  }
  return Behavior(std::move(joint), std::move(table));
}

Behavior mix(const Rational& weight, const Behavior& p, const Behavior& q) {
  check_same_scenario(p, q);
  std::vector<Rational> table(p.size());
  const Rational rest = 1 - weight;
  for (std::size_t k = 0; k < table.size(); ++k) table[k] = weight * p[k] + rest * q[k];
  return Behavior(p.scenario(), std::move(table));
}

Behavior combine(std::span<const Rational> weights, std::span<const Behavior> members) {
  if (weights.size() != members.size() || members.empty())
    throw ShapeError("combine needs one weight per member and at least one member");
  std::vector<Rational> table(members.front().size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    check_same_scenario(members.front(), members[i]);
    for (std::size_t k = 0; k < table.size(); ++k) table[k] += weights[i] * members[i][k];
  }
  return Behavior(members.front().scenario(), std::move(table));
}

Behavior uniform(const Scenario& scenario) {
  std::vector<Rational> table(scenario.total_entries());
  for (std::size_t xi = 0; xi < scenario.input_tuples(); ++xi) {
    const Rational value(1, static_cast<long>(scenario.block_size(xi)));
    for (std::size_t k = 0; k < scenario.block_size(xi); ++k) table[scenario.block_offset(xi) + k] = value;
  }
  return Behavior(scenario, std::move(table));
}

Behavior deterministic(const Scenario& scenario, const std::vector<std::vector<std::size_t>>& assignment) {
  if (assignment.size() != scenario.parties()) throw ShapeError("assignment has wrong number of parties");
  std::vector<Rational> table(scenario.total_entries());
  for (std::size_t xi = 0; xi < scenario.input_tuples(); ++xi) {
    const auto x = scenario.decode_inputs(xi);
    std::vector<std::size_t> a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (assignment[i].size() != scenario.inputs(i)) throw ShapeError("assignment has wrong number of inputs");
      a[i] = assignment[i][x[i]];
    }
    table[scenario.entry(x, a)] = 1;
  }
  return Behavior(scenario, std::move(table));
}

namespace {

template <typename Rule>
Behavior binary_box(Rule rule) {
  const Scenario& sc = bell_2222();
  std::vector<Rational> table(sc.total_entries());
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) table[sc.entry({x, y}, {a, b})] = rule(x, y, a, b);
  return Behavior(sc, std::move(table));
}

}  // namespace

Behavior pr_box() { return nonlocal_vertex(0, 0, 0); }

Behavior anti_pr_box() { return nonlocal_vertex(0, 0, 1); }

Behavior local_vertex(int alpha, int beta, int gamma, int sigma) {
  return binary_box([=](std::size_t x, std::size_t y, std::size_t a, std::size_t b) {
    const bool hit = a == ((static_cast<std::size_t>(alpha) * x) ^ static_cast<std::size_t>(beta)) &&
                     b == ((static_cast<std::size_t>(gamma) * y) ^ static_cast<std::size_t>(sigma));
    return Rational(hit ? 1 : 0);
  });
}

Behavior nonlocal_vertex(int r, int s, int t) {
  return binary_box([=](std::size_t x, std::size_t y, std::size_t a, std::size_t b) {
    const std::size_t rhs = (x * y) ^ (static_cast<std::size_t>(r) * x) ^ (static_cast<std::size_t>(s) * y) ^
                            static_cast<std::size_t>(t);
    return (a ^ b) == rhs ? Rational(1, 2) : Rational(0);
  });
}

Behavior maximally_mixed_bit() { return uniform(Scenario::single(2, 2)); }

Behavior iso(const Rational& eps) {
  if (eps < 0 || eps > 1) throw PreconditionError("iso: eps = " + format_rational(eps) + " outside [0,1]");
  return mix(1 - eps, pr_box(), anti_pr_box());
}

Rational chsh(const Behavior& b) {
  if (!(b.scenario() == bell_2222()))
    throw ShapeError("chsh needs a (2,2,2,2) behavior, got " + b.scenario().to_string());
  Rational s = 0;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      Rational corr = 0;
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t bb = 0; bb < 2; ++bb) {
          const Rational& p = b.at({x, y}, {a, bb});
          corr += ((a ^ bb) ? -p : p);
        }
      s += (x && y) ? Rational(-corr) : corr;
    }
  }
  return s;
}

Behavior relabel(const Behavior& b, std::size_t party, std::span<const std::size_t> input_perm,
                 const std::vector<std::vector<std::size_t>>& output_perms) {
  const Scenario& sc = b.scenario();
  if (party >= sc.parties()) throw ShapeError("party index out of range");
  const std::size_t m = sc.inputs(party);
  check_permutation(input_perm, m, "input permutation");
  if (output_perms.size() != m) throw ShapeError("need one output permutation per input");
  for (std::size_t j = 0; j < m; ++j) check_permutation(output_perms[j], sc.outputs(party, j), "output permutation");

  auto outputs = sc.output_counts();
  for (std::size_t j = 0; j < m; ++j) outputs[party][input_perm[j]] = sc.outputs(party, j);
  Scenario target(std::move(outputs));

  std::vector<Rational> table(target.total_entries());
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
    const auto x = sc.decode_inputs(xi);
    auto nx = x;
    nx[party] = input_perm[x[party]];
    for (std::size_t k = 0; k < sc.block_size(xi); ++k) {
      auto a = sc.decode_outputs(xi, k);
      a[party] = output_perms[x[party]][a[party]];
      table[target.entry(nx, a)] = b[sc.block_offset(xi) + k];
    }
  }
  return Behavior(std::move(target), std::move(table));
}

bool equal_up_to_relabeling(const Behavior& p, const Behavior& q, std::size_t party) {
  const Scenario& sc = p.scenario();
  if (party >= sc.parties() || q.scenario().parties() != sc.parties()) return false;
  if (sc.inputs(party) != q.scenario().inputs(party)) return false;
  const std::size_t m = sc.inputs(party);

  std::vector<std::size_t> input_perm(m);
  std::iota(input_perm.begin(), input_perm.end(), 0);
  do {
    bool shape_ok = true;
    for (std::size_t j = 0; j < m && shape_ok; ++j)
      shape_ok = sc.outputs(party, j) == q.scenario().outputs(party, input_perm[j]);
    if (!shape_ok) continue;

    // Odometer over the product of per-input output permutations.
    std::vector<std::vector<std::size_t>> perms(m);
    for (std::size_t j = 0; j < m; ++j) {
      perms[j].resize(sc.outputs(party, j));
      std::iota(perms[j].begin(), perms[j].end(), 0);
    }
    while (true) {
      if (relabel(p, party, input_perm, perms) == q) return true;
      std::size_t j = 0;
      for (; j < m; ++j) {
        if (std::next_permutation(perms[j].begin(), perms[j].end())) break;
      }
      if (j == m) break;
    }
  } while (std::next_permutation(input_perm.begin(), input_perm.end()));
  return false;
}

Behavior reorder_parties(const Behavior& b, std::span<const std::size_t> order) {
  const Scenario& sc = b.scenario();
  const std::size_t n = sc.parties();
  check_permutation(order, n, "party order");
  std::vector<std::vector<std::size_t>> outputs(n);
  for (std::size_t k = 0; k < n; ++k) outputs[k] = sc.output_counts()[order[k]];
  Scenario target(std::move(outputs));
  std::vector<Rational> table(target.total_entries());
  std::vector<std::size_t> nx(n), na(n);
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
    const auto x = sc.decode_inputs(xi);
    for (std::size_t k = 0; k < n; ++k) nx[k] = x[order[k]];
    for (std::size_t j = 0; j < sc.block_size(xi); ++j) {
      const auto a = sc.decode_outputs(xi, j);
      for (std::size_t k = 0; k < n; ++k) na[k] = a[order[k]];
      table[target.entry(nx, na)] = b[sc.block_offset(xi) + j];
    }
  }
  return Behavior(std::move(target), std::move(table));
}

}  // namespace boxworld
