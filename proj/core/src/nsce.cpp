#include "boxworld/nsce.hpp"

#include <algorithm>
#include <numeric>

#include "boxworld/error.hpp"
#include "boxworld/simplex.hpp"

namespace boxworld {

namespace {

std::vector<std::size_t> first_parties(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

using WeightedTables = std::vector<std::pair<std::vector<Rational>, Rational>>;

WeightedTables canonical(const std::vector<std::pair<Rational, Behavior>>& ens) {
  WeightedTables out;
  for (const auto& [w, b] : ens) out.emplace_back(b.table(), w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CompleteExtension extension_from_ensembles(const Behavior& base, std::vector<Ensemble> ensembles) {
  if (ensembles.empty()) throw ShapeError("an extension needs at least one ensemble");
  const Scenario& sc = base.scenario();
  std::vector<std::size_t> sizes;
  for (const auto& ens : ensembles) {
    if (ens.members.empty()) throw ShapeError("empty ensemble");
    sizes.push_back(ens.members.size());
  }
  const std::size_t nz = sizes.size();
  Scenario joint = sc.concat(Scenario({sizes}));
  std::vector<Rational> table(joint.total_entries());
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
    for (std::size_t z = 0; z < nz; ++z) {
      const std::size_t off = joint.block_offset(xi * nz + z);
      const std::size_t ne = sizes[z];
      for (std::size_t e = 0; e < ne; ++e) {
        const auto& m = ensembles[z].members[e];
        for (std::size_t k = 0; k < sc.block_size(xi); ++k) {
          table[off + k * ne + e] = m.weight * m.behavior[sc.block_offset(xi) + k];
        }
      }
    }
  }
  return {base, Behavior(std::move(joint), std::move(table)), std::move(ensembles)};
}

CompleteExtension nsce(const Behavior& base, const NsPolytope& polytope) {
  return extension_from_ensembles(base, minimal_ensembles(base, polytope));
}

CompleteExtension nsce(const Behavior& base, const PolytopeOptions& options) {
  return nsce(base, NsPolytope(base.scenario(), options));
}

std::vector<std::pair<Rational, Behavior>> prepared_ensemble(const CompleteExtension& ce, std::size_t z) {
  const Scenario& sc = ce.base.scenario();
  const Scenario& joint = ce.extension.scenario();
  const std::size_t party = ce.extending_party();
  const std::size_t nz = joint.inputs(party);
  if (z >= nz) throw ShapeError("extending input out of range");
  const std::size_t ne = joint.outputs(party, z);
  std::vector<std::pair<Rational, Behavior>> out;
  for (std::size_t e = 0; e < ne; ++e) {
    Rational pe = 0;
    {
      const std::size_t off = joint.block_offset(z);
      for (std::size_t k = 0; k < sc.block_size(0); ++k) pe += ce.extension[off + k * ne + e];
    }
    if (pe == 0) continue;
    std::vector<Rational> table(sc.total_entries());
    for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
      const std::size_t off = joint.block_offset(xi * nz + z);
      for (std::size_t k = 0; k < sc.block_size(xi); ++k)
        table[sc.block_offset(xi) + k] = ce.extension[off + k * ne + e] / pe;
    }
    out.emplace_back(pe, Behavior(sc, std::move(table)));
  }
  return out;
}

bool verify_access(const CompleteExtension& ce, const PolytopeOptions& options) {
  const std::size_t party = ce.extending_party();
  if (ce.extension.scenario().parties() != party + 1) return false;
  if (!(ce.extension.scenario().restrict_to(first_parties(party)) == ce.base.scenario())) return false;
  if (!validate(ce.extension).ok()) return false;
  if (!(marginal(ce.extension, first_parties(party)) == ce.base)) return false;

  std::vector<WeightedTables> prepared;
  for (std::size_t z = 0; z < ce.extension.scenario().inputs(party); ++z)
    prepared.push_back(canonical(prepared_ensemble(ce, z)));

  for (const auto& ens : minimal_ensembles(ce.base, options)) {
    std::vector<std::pair<Rational, Behavior>> pairs;
    for (const auto& m : ens.members) pairs.emplace_back(m.weight, m.behavior);
    const auto want = canonical(pairs);
    if (std::find(prepared.begin(), prepared.end(), want) == prepared.end()) return false;
  }
  return true;
}

namespace {

/// The GENERATION feasibility problem for one target input z', kept sparse.
/// Columns: s_z, then r[z][e][e'] = s_z p(e'|e,z,z'). Rows: sum_z s_z = 1,
/// one row per (z, e) tying r to s_z, one row per (x, a, e') matching the target.
struct SparseGeneration {
  std::size_t nz = 0, total_e = 0, nep = 0;
  std::vector<std::size_t> ne, r_offset;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  RVector b;
  std::size_t columns() const { return nz + total_e * nep; }
  std::size_t r_index(std::size_t z, std::size_t e, std::size_t ep) const { return nz + (r_offset[z] + e) * nep + ep; }
  std::size_t pair_row(std::size_t z, std::size_t e) const { return 1 + r_offset[z] + e; }
};

SparseGeneration build_generation(const CompleteExtension& ce, const Behavior& target, std::size_t zp) {
  const Scenario& sc = ce.base.scenario();
  const Scenario& joint = ce.extension.scenario();
  const Scenario& ts = target.scenario();
  const std::size_t party = ce.extending_party();
  SparseGeneration g;
  g.nz = joint.inputs(party);
  g.ne.resize(g.nz);
  g.r_offset.resize(g.nz);
  for (std::size_t z = 0; z < g.nz; ++z) {
    g.ne[z] = joint.outputs(party, z);
    g.r_offset[z] = g.total_e;
    g.total_e += g.ne[z];
  }
  const std::size_t nzp = ts.inputs(party);
  g.nep = ts.outputs(party, zp);

  g.rows.emplace_back();
  for (std::size_t z = 0; z < g.nz; ++z) g.rows.back().emplace_back(z, Rational(1));
  g.b.emplace_back(1);
  for (std::size_t z = 0; z < g.nz; ++z)
    for (std::size_t e = 0; e < g.ne[z]; ++e) {
      auto& row = g.rows.emplace_back();
      row.emplace_back(z, Rational(-1));
      for (std::size_t ep = 0; ep < g.nep; ++ep) row.emplace_back(g.r_index(z, e, ep), Rational(1));
      g.b.emplace_back(0);
    }
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi)
    for (std::size_t k = 0; k < sc.block_size(xi); ++k)
      for (std::size_t ep = 0; ep < g.nep; ++ep) {
        auto& row = g.rows.emplace_back();
        for (std::size_t z = 0; z < g.nz; ++z) {
          const std::size_t off = joint.block_offset(xi * g.nz + z);
          for (std::size_t e = 0; e < g.ne[z]; ++e) {
            const Rational& v = ce.extension[off + k * g.ne[z] + e];
            if (v != 0) row.emplace_back(g.r_index(z, e, ep), v);
          }
        }
        g.b.push_back(target[ts.block_offset(xi * nzp + zp) + k * g.nep + ep]);
      }
  return g;
}

void check_generation_target(const CompleteExtension& ce, const Behavior& target) {
  const std::size_t party = ce.extending_party();
  const Scenario& ts = target.scenario();
  if (ts.parties() != party + 1 || !(ts.restrict_to(first_parties(party)) == ce.base.scenario()))
    throw PreconditionError("target must extend the base scenario by exactly one party");
  if (!(marginal(target, first_parties(party)) == ce.base))
    throw PreconditionError("target marginal on the base parties differs from the base behavior");
}

}  // namespace

LinearProgram generation_lp(const CompleteExtension& ce, const Behavior& target, std::size_t target_input) {
  check_generation_target(ce, target);
  if (target_input >= target.scenario().inputs(ce.extending_party())) throw ShapeError("target input out of range");
  const auto g = build_generation(ce, target, target_input);
  LinearProgram lp;
  lp.variables = g.columns();
  for (const auto& row : g.rows) {
    RVector dense(lp.variables);
    for (const auto& [c, v] : row) dense[c] = v;
    lp.a.push_back(std::move(dense));
  }
  lp.b = g.b;
  return lp;
}

GenerationResult generate_extension(const CompleteExtension& ce, const Behavior& target) {
  check_generation_target(ce, target);
  const std::size_t nzp = target.scenario().inputs(ce.extending_party());

  GenerationResult result;
  result.wiring.input_map.resize(nzp);
  result.wiring.output_map.resize(nzp);
  for (std::size_t zp = 0; zp < nzp; ++zp) {
    const auto g = build_generation(ce, target, zp);
    const std::size_t n = g.columns();

    // Presolve: a target row with b = 0 forces every (nonnegative) term in it
    // to vanish. A (z, e) with no surviving r[z][e][.] then forces s_z = 0.
    std::vector<char> alive(n, 1);
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> witness_row(n, kNone);
    const std::size_t first_target_row = 1 + g.total_e;
    for (std::size_t i = first_target_row; i < g.rows.size(); ++i) {
      if (g.b[i] != 0) continue;
      for (const auto& [c, v] : g.rows[i])
        if (alive[c]) alive[c] = 0, witness_row[c] = i;
    }
    std::vector<std::size_t> dead_pair(g.nz, 0);  // an e of z with no live r, when s_z dies
    for (std::size_t z = 0; z < g.nz; ++z) {
      for (std::size_t e = 0; e < g.ne[z] && alive[z]; ++e) {
        bool any = false;
        for (std::size_t ep = 0; ep < g.nep; ++ep) any = any || alive[g.r_index(z, e, ep)];
        if (!any) alive[z] = 0, dead_pair[z] = e;
      }
      if (alive[z]) continue;
      for (std::size_t e = 0; e < g.ne[z]; ++e)
        for (std::size_t ep = 0; ep < g.nep; ++ep) alive[g.r_index(z, e, ep)] = 0;
    }

    std::vector<std::size_t> column_of(n, 0), kept_columns;
    for (std::size_t c = 0; c < n; ++c)
      if (alive[c]) column_of[c] = kept_columns.size(), kept_columns.push_back(c);
    LinearProgram lp;
    lp.variables = kept_columns.size();
    std::vector<std::size_t> kept_rows;
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
      RVector dense(lp.variables);
      bool nonzero = false;
      for (const auto& [c, v] : g.rows[i])
        if (alive[c]) dense[column_of[c]] = v, nonzero = true;
      if (!nonzero && g.b[i] == 0) continue;
      lp.a.push_back(std::move(dense));
      lp.b.push_back(g.b[i]);
      kept_rows.push_back(i);
    }

    const LpResult r = lp.variables == 0 && lp.a.empty() ? LpResult{LpStatus::Optimal, {}, 0, {}, 0} : solve_lp(lp);
    if (r.status != LpStatus::Optimal) {
      // Lift the certificate to the full problem. Raising y on a b = 0 target
      // row only increases A^T y on eliminated columns, and lowering y on a
      // (z, e) row only touches s_z and eliminated r columns.
      RVector y(g.rows.size());
      for (std::size_t i = 0; i < kept_rows.size(); ++i) y[kept_rows[i]] = r.farkas[i];
      RVector col(n);
      for (std::size_t i = 0; i < g.rows.size(); ++i)
        for (const auto& [c, v] : g.rows[i]) col[c] += v * y[i];
      auto raise = [&](std::size_t row, const Rational& delta) {
        y[row] += delta;
        for (const auto& [c, v] : g.rows[row]) col[c] += v * delta;
      };
      for (std::size_t z = 0; z < g.nz; ++z) {
        if (alive[z]) continue;
        // Columns killed only through s_z: raise their (z, e) row, which lowers s_z.
        for (std::size_t e = 0; e < g.ne[z]; ++e) {
          Rational deficit = 0;
          for (std::size_t ep = 0; ep < g.nep; ++ep) {
            const std::size_t c = g.r_index(z, e, ep);
            if (witness_row[c] == kNone && col[c] < deficit) deficit = col[c];
          }
          if (deficit < 0) raise(g.pair_row(z, e), Rational(-deficit));
        }
        // Every r[z][e*][.] has a zero-row witness, so lowering that row is repaired below.
        if (col[z] < 0) raise(g.pair_row(z, dead_pair[z]), Rational(col[z]));
      }
      for (std::size_t c = g.nz; c < n; ++c) {
        if (alive[c] || col[c] >= 0 || witness_row[c] == kNone) continue;
        for (const auto& [cc, coef] : g.rows[witness_row[c]])
          if (cc == c) {
            raise(witness_row[c], Rational(-col[c] / coef));
            break;
          }
      }
      result.feasible = false;
      result.failed_input = zp;
      result.farkas = std::move(y);
      return result;
    }

    RVector x(n);
    for (std::size_t j = 0; j < kept_columns.size(); ++j) x[kept_columns[j]] = r.x[j];
    auto& in_map = result.wiring.input_map[zp];
    auto& out_map = result.wiring.output_map[zp];
    in_map.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(g.nz));
    out_map.resize(g.nz);
    for (std::size_t z = 0; z < g.nz; ++z) {
      out_map[z].assign(g.ne[z], std::vector<Rational>(g.nep));
      for (std::size_t e = 0; e < g.ne[z]; ++e)
        for (std::size_t ep = 0; ep < g.nep; ++ep)
          out_map[z][e][ep] = in_map[z] == 0 ? Rational(ep == 0 ? 1 : 0) : x[g.r_index(z, e, ep)] / in_map[z];
    }
  }
  result.feasible = true;
  return result;
}

Behavior apply_wiring(const CompleteExtension& ce, const Wiring& wiring) {
  const Scenario& sc = ce.base.scenario();
  const Scenario& joint = ce.extension.scenario();
  const std::size_t party = ce.extending_party();
  const std::size_t nz = joint.inputs(party);
  const std::size_t nzp = wiring.input_map.size();
  if (wiring.output_map.size() != nzp) throw ShapeError("wiring maps disagree on the number of inputs");
  std::vector<std::size_t> nep(nzp);
  for (std::size_t zp = 0; zp < nzp; ++zp) {
    if (wiring.input_map[zp].size() != nz || wiring.output_map[zp].size() != nz)
      throw ShapeError("wiring does not match the extending system");
    nep[zp] = wiring.output_map[zp].front().front().size();
  }
  Scenario ts = sc.concat(Scenario({nep}));
  std::vector<Rational> table(ts.total_entries());
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
    for (std::size_t zp = 0; zp < nzp; ++zp) {
      const std::size_t toff = ts.block_offset(xi * nzp + zp);
      for (std::size_t z = 0; z < nz; ++z) {
        const Rational& pz = wiring.input_map[zp][z];
        if (pz == 0) continue;
        const std::size_t ne = joint.outputs(party, z);
        const std::size_t off = joint.block_offset(xi * nz + z);
        for (std::size_t k = 0; k < sc.block_size(xi); ++k) {
          for (std::size_t e = 0; e < ne; ++e) {
            const Rational& p = ce.extension[off + k * ne + e];
            if (p == 0) continue;
            for (std::size_t ep = 0; ep < nep[zp]; ++ep)
              table[toff + k * nep[zp] + ep] += pz * p * wiring.output_map[zp][z][e][ep];
          }
        }
      }
    }
  }
  return Behavior(std::move(ts), std::move(table));
}

DimBound nsce_dim_bound(const Scenario& scenario) {
  DimBound out;
  out.dim_b = ns_dimension(scenario);
  out.t = scenario.total_entries();
  const long long t = static_cast<long long>(out.t);
  const long long d = out.dim_b;
  const long long half = t / 2;
  out.vertex_bound = binomial(2 * t - half - d, half) + binomial(3 * t - half - (d + 1), t - half - 1);
  out.bound = BigInt(d + 1) * (binomial(out.vertex_bound, d + 1) * d + 1);
  out.caratheodory_cap = static_cast<std::size_t>(d + 1);
  return out;
}

MirrorReport mirror_diagnostic(const CompleteExtension& ce, const PolytopeOptions& options) {
  MirrorReport report;
  if (ce.base.scenario().parties() != 1) {
    report.detail = "defined for single-party bases only";
    return report;
  }
  const Behavior e_marginal = marginal(ce.extension, {1});
  const CompleteExtension mirrored = nsce(e_marginal, options);
  const std::vector<std::size_t> swap = {1, 0};
  const Behavior swapped = reorder_parties(ce.extension, swap);
  report.reconstructs = equal_up_to_relabeling(mirrored.extension, swapped, 1);
  report.detail = report.reconstructs ? "NSCE of the extending marginal reproduces the extension"
                                      : "NSCE of the extending marginal differs from the extension";
  return report;
}

}  // namespace boxworld
