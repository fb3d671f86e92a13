#include <cmath>
#include <filesystem>

#include <boxworld/behavior_json.hpp>
#include <boxworld/convexify.hpp>
#include <boxworld/error.hpp>
#include <boxworld/nsce.hpp>
#include <boxworld/overhead.hpp>
#include <boxworld/parallel.hpp>
#include <boxworld/squash.hpp>

#include "commands.hpp"

namespace boxworld::cli {

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string in_dir(const ReproduceOptions& opt, const std::string& name) {
  return (std::filesystem::path(opt.out_dir) / name).string();
}

BoundCurve to_curve(const std::vector<double>& param, const std::vector<double>& value, std::string label) {
  return BoundCurve{param, value, std::move(label)};
}

Rows curve_rows(const BoundCurve& c) {
  Rows rows;
  for (std::size_t i = 0; i < c.param.size(); ++i) rows.push_back({num(c.param[i]), num(c.value[i])});
  return rows;
}

void write_hull(Context& ctx, const ReproduceOptions& opt, std::vector<BoundCurve> curves) {
  for (const auto& path : opt.overlays) curves.push_back(read_curve_csv(path));
  emit(ctx, in_dir(opt, "hull.csv"), csv(ctx, {"param", "value"}, curve_rows(lower_convex_hull(curves))));
}

void nsdi_2222(Context& ctx, const ReproduceOptions& opt) {
  if (opt.grid < 2) throw PreconditionError("grid needs at least two points");
  const NsPolytope bell(Scenario::bipartite(2, 2, 2, 2), ctx.polytope);
  SquashConfig cfg;
  cfg.intrinsic.seed = ctx.seed;
  const std::size_t n = opt.grid;
  std::vector<double> eps(n), nsq(n), cmi(n), mi(n), cost(n);
  std::vector<std::string> witness(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational e(static_cast<long>(k), static_cast<long>(2 * (n - 1)));  // [0, 1/2]
    const Behavior p = iso(e);
    const Behavior device = nsce(p, bell).extension;
    const auto s = squash(Quantifier::Intrinsic, device, cfg);
    eps[k] = to_double(e);
    nsq[k] = s.value;
    witness[k] = s.witness.summary();
    cmi[k] = squash(Quantifier::ConditionalMutualInformation, device, cfg).value;
    mi[k] = squash(Quantifier::MutualInformation, device, cfg).value;
    cost[k] = to_double(bell.nonlocality_cost(p));
  }
  Rows nsq_rows, line_rows, mi_rows;
  for (std::size_t k = 0; k < n; ++k) {
    nsq_rows.push_back({num(eps[k]), num(nsq[k]), witness[k]});
    line_rows.push_back({num(eps[k]), num(cmi[k]), num(cost[k])});
    mi_rows.push_back({num(eps[k]), num(mi[k])});
  }
  emit(ctx, in_dir(opt, "squashed_nonlocality.csv"), csv(ctx, {"eps", "value", "witness"}, nsq_rows));
  emit(ctx, in_dir(opt, "cmi_cost.csv"), csv(ctx, {"eps", "squashed_cmi", "nonlocality_cost"}, line_rows));
  emit(ctx, in_dir(opt, "squashed_mi.csv"), csv(ctx, {"eps", "value"}, mi_rows));
  write_hull(ctx, opt, {to_curve(eps, nsq, "nsq"), to_curve(eps, cmi, "cmi"), to_curve(eps, mi, "mi")});
}

void nsdi_3222_partial(Context& ctx, const ReproduceOptions& opt) {
  if (!opt.family) throw PreconditionError("nsdi-3222-partial needs --family with the device list");
  const auto doc = nlohmann::json::parse(read_text_file(*opt.family));
  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
    throw ShapeError("family file needs a non-empty 'points' array");
  std::vector<std::pair<double, Behavior>> points;
  for (const auto& pt : doc["points"])
    points.emplace_back(pt.at("param").get<double>(), behavior_from_json(pt.at("behavior").dump()));
  const Scenario sc = points.front().second.scenario();
  const NsPolytope polytope(sc, ctx.polytope);
  std::vector<double> param, cmi;
  Rows rows;
  for (const auto& [p, b] : points) {
    if (!(b.scenario() == sc)) throw ShapeError("family devices must share one scenario");
    const double v = squash_cmi_lp(b, polytope).value;
    param.push_back(p);
    cmi.push_back(v);
    rows.push_back({num(p), num(v)});
  }
  emit(ctx, in_dir(opt, "squashed_cmi.csv"), csv(ctx, {"param", "value"}, rows));
  write_hull(ctx, opt, {to_curve(param, cmi, "cmi")});
}

void ppt_overhead(Context& ctx, const ReproduceOptions& opt) {
  if (opt.grid < 2) throw PreconditionError("grid needs at least two points");
  Rows rows;
  for (std::size_t dk : opt.dks) {
    const auto range = thm5_domain(dk, opt.ds);
    for (std::size_t i = 0; i < opt.grid; ++i) {
      // Half-open domain: the last sample stays below the upper end.
      const double eps = range.lo + (range.hi - range.lo) * static_cast<double>(i) / static_cast<double>(opt.grid);
      const auto b = thm5_overhead(dk, opt.ds, eps, 1.0);
      rows.push_back({std::to_string(dk), std::to_string(opt.ds), num(eps), num(b.v), num(b.theta), num(b.eta)});
    }
  }
  emit(ctx, in_dir(opt, "ppt_overhead.csv"), csv(ctx, {"dk", "ds", "eps", "v_over_m", "theta", "eta"}, rows));
}

void mdi_tradeoff(Context& ctx, const ReproduceOptions& opt) {
  std::vector<std::string> header = {"distance_km"};
  for (double q : opt.qs) header.push_back("q=" + num(q));
  header.push_back("repeaterless");
  Rows rows;
  for (int km = 0; km <= 200; ++km) {
    const double eta = transmittance(km, opt.alpha);
    std::vector<std::string> row = {std::to_string(km)};
    for (double q : opt.qs) row.push_back(num(mdi_capacity(q, eta, eta)));
    row.push_back(num(repeaterless_bound(eta, eta)));
    rows.push_back(std::move(row));
  }
  emit(ctx, in_dir(opt, "mdi_tradeoff.csv"), csv(ctx, header, rows));
}

}  // namespace

void reproduce(Context& ctx, const ReproduceOptions& opt) {
  if (opt.figure == "nsdi-2222") {
    nsdi_2222(ctx, opt);
  } else if (opt.figure == "nsdi-3222-partial") {
    nsdi_3222_partial(ctx, opt);
  } else if (opt.figure == "ppt-overhead") {
    ppt_overhead(ctx, opt);
  } else if (opt.figure == "mdi-tradeoff") {
    mdi_tradeoff(ctx, opt);
  } else {
    throw PreconditionError("unknown figure id '" + opt.figure + "'");
  }
  write_manifest(ctx, in_dir(opt, "manifest.json"));
}

}  // namespace boxworld::cli
