#include "boxworld_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include <boxworld/boxworld.hpp>

#include "commands.hpp"
#include "context.hpp"

namespace boxworld::cli {

namespace {

using nlohmann::json;
using Rows = std::vector<std::vector<std::string>>;

json behavior_json(const Behavior& b) { return json::parse(behavior_to_json(b)); }

std::string tag_name(VertexTag t) { return to_string(t); }

json ensemble_json(const Ensemble& e, const NsPolytope& polytope) {
  json members = json::array();
  for (const auto& m : e.members)
    members.push_back({{"weight", format_rational(m.weight)},
                       {"vertex", m.vertex},
                       {"tag", tag_name(polytope.vertices()[m.vertex].tag)}});
  return {{"members", members}};
}

json rational_matrix(const std::vector<std::vector<Rational>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    out.push_back(r);
  }
  return out;
}

CdState read_cd_state(const std::string& path) {
  const json j = json::parse(read_text_file(path));
  std::vector<double> t;
  for (const auto& v : j.at("table")) t.push_back(v.is_string() ? to_double(parse_rational(v.get<std::string>())) : v.get<double>());
  return CdState(j.at("nz").get<std::size_t>(), j.at("na").get<std::size_t>(), j.at("ne").get<std::size_t>(), t);
}

// Options of every parsed (sub)command except the run-only ones; the result
// keys the manifest.
void collect(const CLI::App* app, Context& ctx) {
  for (const CLI::Option* o : app->get_options()) {
    const std::string name = o->get_name();
    if (name == "--help" || name == "-h" || name == "--threads" || name == "--seed") continue;
    if (o->count() > 0) {
      ctx.params[name] = o->results();
    } else if (!o->get_default_str().empty()) {
      ctx.params[name] = o->get_default_str();
    }
  }
  for (const CLI::App* sub : app->get_subcommands()) {
    ctx.command += (ctx.command.empty() ? "" : " ") + sub->get_name();
    collect(sub, ctx);
  }
}

void finish_single(Context& ctx, const std::optional<std::string>& out) {
  if (out) write_manifest(ctx, manifest_path_for(*out));
}

struct Replay {
  bool ok = true;
  json report;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact box-world polytopes, complete extensions and secrecy bounds", "boxworld"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  std::size_t threads = 0;
  std::uint64_t seed = 0x5eed;
  app.add_option("--threads", threads, "Worker threads; 0 uses the hardware count");
  app.add_option("--seed", seed, "Seed for randomized searches");

  // polytope
  std::string scenario_text, behavior_path, extension_path;
  std::optional<std::string> out_path;
  auto* polytope = app.add_subcommand("polytope", "Non-signaling polytope queries");
  polytope->require_subcommand(1);
  auto* p_dim = polytope->add_subcommand("dim", "Dimension of the polytope");
  p_dim->add_option("--scenario", scenario_text, "Scenario such as 2:2;2:2")->required();
  auto* p_vert = polytope->add_subcommand("vertices", "Enumerate vertices with tags");
  p_vert->add_option("--scenario", scenario_text)->required();
  p_vert->add_option("--out", out_path);
  auto* p_cost = polytope->add_subcommand("cost", "Nonlocality cost and locality of a behavior");
  p_cost->add_option("--behavior", behavior_path)->required()->check(CLI::ExistingFile);

  // nsce
  auto* ns = app.add_subcommand("nsce", "Non-signaling complete extensions");
  ns->require_subcommand(1);
  auto* n_build = ns->add_subcommand("build", "Build the complete extension of a behavior");
  n_build->add_option("--behavior", behavior_path)->required()->check(CLI::ExistingFile);
  n_build->add_option("--out", out_path);
  auto* n_ens = ns->add_subcommand("ensembles", "List the minimal ensembles of a behavior");
  n_ens->add_option("--behavior", behavior_path)->required()->check(CLI::ExistingFile);
  n_ens->add_option("--out", out_path);
  auto* n_dim = ns->add_subcommand("dim-bound", "Upper bound on the extension polytope dimension");
  n_dim->add_option("--scenario", scenario_text)->required();
  auto* n_gen = ns->add_subcommand("generate", "Find a wiring producing a target extension");
  n_gen->add_option("--behavior", behavior_path, "Behavior whose complete extension is used")
      ->required()
      ->check(CLI::ExistingFile);
  n_gen->add_option("--extension", extension_path, "Target extension")->required()->check(CLI::ExistingFile);
  n_gen->add_option("--out", out_path);

  // squash
  std::string quantifier = "intrinsic", family, eps_min = "0", eps_max = "1/2";
  std::size_t grid = 21, restarts = 32;
  bool no_mixtures = false;
  auto* sq = app.add_subcommand("squash", "Squashed secrecy quantifiers on complete extensions");
  sq->add_option("--quantifier", quantifier)->check(CLI::IsMember({"intrinsic", "cmi", "mi"}));
  auto* sq_b = sq->add_option("--behavior", behavior_path, "Bipartite behavior, or a device on (A, B, E)")
                   ->check(CLI::ExistingFile);
  auto* sq_f = sq->add_option("--family", family, "Behavior family for a sweep")->check(CLI::IsMember({"iso"}));
  sq_b->excludes(sq_f);
  sq->add_option("--grid", grid, "Sweep points")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  sq->add_option("--eps-min", eps_min);
  sq->add_option("--eps-max", eps_max);
  sq->add_option("--restarts", restarts, "Random starts of the channel descent");
  sq->add_flag("--no-mixtures", no_mixtures, "Only pure Eve inputs");
  sq->add_option("--out", out_path);

  // norm
  std::string p1_path, p2_path;
  auto* norm = app.add_subcommand("norm", "Non-signaling norm between two c-d states");
  norm->add_option("--p1", p1_path)->required()->check(CLI::ExistingFile);
  norm->add_option("--p2", p2_path)->required()->check(CLI::ExistingFile);

  // convexify
  std::vector<std::string> inputs;
  auto* cvx = app.add_subcommand("convexify", "Lower convex hull of upper-bound curves");
  cvx->add_option("--in", inputs, "param,value CSV files")->required()->check(CLI::ExistingFile);
  cvx->add_option("--out", out_path);

  // privstate
  int thm = 5;
  std::size_t dk = 2, ds = 2, delta = 1, dim_h = 0;
  double eps = 0.1, theta = 0;
  std::optional<double> memory;
  bool check_ppt = false;
  auto* ps = app.add_subcommand("privstate", "Private-state overhead bounds and examples");
  ps->require_subcommand(1);
  auto* ps_over = ps->add_subcommand("overhead", "Memory-overhead bound");
  ps_over->add_option("--thm", thm, "1, 3 or 5")->check(CLI::IsMember({1, 3, 5}));
  ps_over->add_option("--dk", dk)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  ps_over->add_option("--ds", ds)->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  ps_over->add_option("--eps", eps);
  ps_over->add_option("--M", memory, "Scheme memory; default delta log2(d_k d_s)");
  ps_over->add_option("--theta", theta, "Repeatable key (bound 1)");
  ps_over->add_option("--delta", delta, "Hub degree");
  ps_over->add_option("--dim-h", dim_h, "Dimension for the repeatable-key bound; 0 uses (d_k d_s)^2");
  auto* ps_omega = ps->add_subcommand("omega", "The pbit with swap twisting");
  ps_omega->add_option("--ds", ds)->check(CLI::Range(std::size_t{2}, std::size_t{8}));
  ps_omega->add_flag("--check-ppt", check_ppt);

  // mdi
  double q = 1, eta1 = 1, eta2 = 1, distance = 0, alpha = 1.0 / 22.0;
  auto* mdi = app.add_subcommand("mdi", "Dual-rail MDI capacity against the repeaterless bound");
  mdi->add_option("--q", q, "Bell-measurement success probability");
  auto* o_e1 = mdi->add_option("--eta1", eta1);
  auto* o_e2 = mdi->add_option("--eta2", eta2);
  auto* o_l = mdi->add_option("--distance-km", distance, "Both links get exp(-alpha L)");
  mdi->add_option("--alpha", alpha, "Attenuation per km");
  o_e1->needs(o_e2);
  o_e2->needs(o_e1);
  o_l->excludes(o_e1);
  o_l->excludes(o_e2);

  // reproduce
  ReproduceOptions rep;
  std::string family_file;
  auto* rp = app.add_subcommand("reproduce", "Data bundle behind a figure");
  rp->add_option("--figure", rep.figure)->required()->check(CLI::IsMember(kFigures));
  rp->add_option("--out-dir", rep.out_dir)->required();
  rp->add_option("--grid", rep.grid);
  rp->add_option("--overlay", rep.overlays, "External upper-bound curves for the hull")->check(CLI::ExistingFile);
  rp->add_option("--family", family_file, "JSON {points:[{param, behavior}]}")->check(CLI::ExistingFile);
  rp->add_option("--dk", rep.dks);
  rp->add_option("--ds", rep.ds);
  rp->add_option("--alpha", rep.alpha);
  rp->add_option("--q", rep.qs);

  // replay
  std::string manifest_file;
  auto* rpl = app.add_subcommand("replay", "Re-run a manifest and compare output hashes");
  rpl->add_option("--manifest", manifest_file)->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Context ctx{out, err, args};
  ctx.seed = seed;
  ctx.threads = threads;
  if (const char* dir = std::getenv(kCacheEnv)) ctx.polytope.cache_dir = dir;
  collect(&app, ctx);
  seal(ctx);
  set_thread_count(threads);

  try {
    if (p_dim->parsed()) {
      const NsPolytope p(Scenario::parse(scenario_text), ctx.polytope);
      emit(ctx, std::nullopt,
           json_text(ctx, {{"scenario", p.scenario().to_string()},
                           {"dimension", p.dimension()},
                           {"ambient", p.ambient_dimension()},
                           {"equality_rank", p.equality_rank()}}));
    } else if (p_vert->parsed()) {
      const NsPolytope p(Scenario::parse(scenario_text), ctx.polytope);
      json vs = json::array();
      for (const auto& v : p.vertices()) vs.push_back({{"tag", tag_name(v.tag)}, {"behavior", behavior_json(v.behavior)}});
      emit(ctx, out_path, json_text(ctx, {{"scenario", p.scenario().to_string()}, {"count", vs.size()}, {"vertices", vs}}));
      finish_single(ctx, out_path);
    } else if (p_cost->parsed()) {
      const Behavior b = read_behavior_file(behavior_path);
      const NsPolytope p(b.scenario(), ctx.polytope);
      const Rational cost = p.nonlocality_cost(b);
      json j = {{"cost", format_rational(cost)}, {"cost_value", to_double(cost)}, {"local", cost == 0}};
      if (b.scenario() == Scenario::bipartite(2, 2, 2, 2)) j["chsh"] = format_rational(chsh(b));
      emit(ctx, std::nullopt, json_text(ctx, j));
    } else if (n_build->parsed()) {
      const auto ce = nsce(read_behavior_file(behavior_path), ctx.polytope);
      emit(ctx, out_path, json_text(ctx, behavior_json(ce.extension)));
      finish_single(ctx, out_path);
    } else if (n_ens->parsed()) {
      const Behavior b = read_behavior_file(behavior_path);
      const NsPolytope p(b.scenario(), ctx.polytope);
      json list = json::array();
      for (const auto& e : minimal_ensembles(b, p)) list.push_back(ensemble_json(e, p));
      emit(ctx, out_path, json_text(ctx, {{"count", list.size()}, {"ensembles", list}}));
      finish_single(ctx, out_path);
    } else if (n_dim->parsed()) {
      const auto d = nsce_dim_bound(Scenario::parse(scenario_text));
      emit(ctx, std::nullopt,
           json_text(ctx, {{"dim", d.dim_b},
                           {"t", d.t},
                           {"vertex_bound", d.vertex_bound.str()},
                           {"bound", d.bound.str()},
                           {"bound_digits", d.bound.str().size()},
                           {"caratheodory_cap", d.caratheodory_cap}}));
    } else if (n_gen->parsed()) {
      const auto ce = nsce(read_behavior_file(behavior_path), ctx.polytope);
      const auto r = generate_extension(ce, read_behavior_file(extension_path));
      json j = {{"feasible", r.feasible}};
      if (r.feasible) {
        json outputs = json::array();
        for (const auto& per_target : r.wiring.output_map) {
          json per_z = json::array();
          for (const auto& m : per_target) per_z.push_back(rational_matrix(m));
          outputs.push_back(per_z);
        }
        j["input_map"] = rational_matrix(r.wiring.input_map);
        j["output_map"] = outputs;
      } else {
        j["failed_input"] = r.failed_input;
        json y = json::array();
        for (const auto& v : r.farkas) y.push_back(format_rational(v));
        j["farkas"] = y;
      }
      emit(ctx, out_path, json_text(ctx, j));
      finish_single(ctx, out_path);
    } else if (sq->parsed()) {
      if (behavior_path.empty() && family.empty()) throw PreconditionError("squash needs --behavior or --family");
      SquashConfig cfg;
      cfg.intrinsic.seed = seed;
      cfg.intrinsic.restarts = restarts;
      cfg.mixtures = !no_mixtures;
      const Quantifier qn = parse_quantifier(quantifier);
      auto device_of = [&](const Behavior& b) {
        if (b.scenario().parties() == 3) return b;
        return nsce(b, ctx.polytope).extension;
      };
      Rows rows;
      auto add_row = [&](const std::string& e, const Behavior& b) {
        const auto r = squash(qn, device_of(b), cfg);
        rows.push_back({e, num(r.value), std::to_string(r.x), std::to_string(r.y), r.witness.summary()});
      };
      if (!behavior_path.empty()) {
        add_row("", read_behavior_file(behavior_path));
      } else {
        const Rational lo = parse_rational(eps_min), hi = parse_rational(eps_max);
        if (lo < 0 || hi > 1 || lo > hi) throw PreconditionError("eps range must satisfy 0 <= min <= max <= 1");
        for (std::size_t k = 0; k < grid; ++k) {
          const Rational e = lo + (hi - lo) * Rational(static_cast<long>(k), static_cast<long>(grid - 1));
          add_row(num(to_double(e)), iso(e));
        }
      }
      emit(ctx, out_path, csv(ctx, {"eps", "value", "x", "y", "witness"}, rows));
      finish_single(ctx, out_path);
    } else if (norm->parsed()) {
      const CdState a = read_cd_state(p1_path), b = read_cd_state(p2_path);
      const auto ca = a.classical_marginal(), cb = b.classical_marginal();
      emit(ctx, std::nullopt,
           json_text(ctx, {{"ns_norm", ns_norm_cd(a, b)}, {"classical_total_variation", total_variation(ca, cb)}}));
    } else if (cvx->parsed()) {
      std::vector<BoundCurve> curves;
      for (const auto& path : inputs) curves.push_back(read_curve_csv(path));
      const auto h = lower_convex_hull(curves);
      Rows rows;
      for (std::size_t i = 0; i < h.param.size(); ++i) rows.push_back({num(h.param[i]), num(h.value[i])});
      emit(ctx, out_path, csv(ctx, {"param", "value"}, rows));
      finish_single(ctx, out_path);
    } else if (ps_over->parsed()) {
      const double m = memory ? *memory : scheme_memory(dk, ds, delta);
      json j = {{"thm", thm}, {"dk", dk}, {"ds", ds}, {"M", m}};
      if (thm == 1) {
        j["theta"] = theta;
        j["delta"] = delta;
        j["v"] = thm1_overhead(dk, ds, theta, delta);
      } else {
        const auto b = thm == 3 ? thm3_overhead(dk, ds, eps, m) : thm5_overhead(dk, ds, eps, m, dim_h);
        j["eps"] = eps;
        j["v"] = b.v;
        j["theta"] = b.theta;
        j["eta"] = b.eta;
      }
      emit(ctx, std::nullopt, json_text(ctx, j));
    } else if (ps_omega->parsed()) {
      const auto omega = build_omega(ds);
      const auto attacked = key_attack(omega);
      json j = {{"ds", ds},
                {"dim", omega.dim()},
                {"is_state", omega.is_state()},
                {"key_distribution", key_distribution(omega)},
                {"trace_distance_to_attacked", 0.5 * trace_norm(omega.matrix() - attacked.matrix())}};
      if (check_ppt) {
        const auto cut = default_ppt_cut(omega);
        j["ppt"] = is_ppt(omega);
        j["min_partial_transpose_eigenvalue"] = partial_transpose(omega, cut).min_eigenvalue();
        j["attacked_ppt"] = is_ppt(attacked);
      }
      emit(ctx, std::nullopt, json_text(ctx, j));
    } else if (mdi->parsed()) {
      if (o_l->count() > 0) eta1 = eta2 = transmittance(distance, alpha);
      emit(ctx, std::nullopt,
           json_text(ctx, {{"q", q},
                           {"eta1", eta1},
                           {"eta2", eta2},
                           {"capacity", mdi_capacity(q, eta1, eta2)},
                           {"repeaterless", repeaterless_bound(eta1, eta2)}}));
    } else if (rp->parsed()) {
      if (!family_file.empty()) rep.family = family_file;
      reproduce(ctx, rep);
      out << "wrote " << ctx.written.size() << " files to " << rep.out_dir << "\n";
    } else if (rpl->parsed()) {
      const json m = json::parse(read_text_file(manifest_file));
      const auto replay_args = m.at("args").get<std::vector<std::string>>();
      std::ostringstream sink, sink_err;
      const int code = run(replay_args, sink, sink_err);
      json mismatches = json::array();
      for (const auto& o : m.at("outputs")) {
        const std::string path = o.at("path").get<std::string>();
        const std::string now = sha256_hex(read_text_file(path));
        if (now != o.at("sha256").get<std::string>()) mismatches.push_back(path);
      }
      const bool ok = code == kExitOk && mismatches.empty();
      out << json({{"manifest_id", m.at("manifest_id")}, {"exit_code", code}, {"reproduced", ok}, {"mismatches", mismatches}})
                 .dump(2)
          << "\n";
      if (!sink_err.str().empty()) err << sink_err.str();
      return ok ? kExitOk : kExitDomain;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace boxworld::cli
