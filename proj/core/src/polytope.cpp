#include "boxworld/polytope.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>

#include <nlohmann/json.hpp>

#include "boxworld/behavior_json.hpp"
#include "boxworld/error.hpp"
#include "boxworld/simplex.hpp"
#include "boxworld/vertex_enum.hpp"

namespace boxworld {

std::string to_string(VertexTag tag) {
  switch (tag) {
    case VertexTag::LocalDeterministic: return "local-deterministic";
    case VertexTag::Nonlocal: return "nonlocal";
    case VertexTag::Other: return "other";
  }
  return "other";
}

struct NsPolytope::Cache {
  std::once_flag once;
  std::vector<Vertex> vertices;
};

namespace {

void ns_equalities(const Scenario& sc, RMatrix& eq, RVector& rhs) {
  const std::size_t t = sc.total_entries();
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
    RVector row(t);
    for (std::size_t k = 0; k < sc.block_size(xi); ++k) row[sc.block_offset(xi) + k] = 1;
    eq.push_back(std::move(row));
    rhs.push_back(1);
  }
  // sum_{a_i} p(a|x) - sum_{a_i} p(a|x with x_i = 0) = 0 for every fixed rest.
  for (std::size_t party = 0; party < sc.parties(); ++party) {
    for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
      const auto x = sc.decode_inputs(xi);
      if (x[party] == 0) continue;
      auto x0 = x;
      x0[party] = 0;
      const std::size_t rest_count = sc.block_size(xi) / sc.outputs(party, x[party]);
      std::vector<RVector> rows(rest_count, RVector(t));
      auto add = [&](const std::vector<std::size_t>& xs, int sign) {
        const std::size_t block = sc.encode_inputs(xs);
        for (std::size_t k = 0; k < sc.block_size(block); ++k) {
          const auto a = sc.decode_outputs(block, k);
          std::size_t rest = 0;
          for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != party) rest = rest * sc.outputs(i, xs[i]) + a[i];
          }
          rows[rest][sc.block_offset(block) + k] += sign;
        }
      };
      add(x, 1);
      add(x0, -1);
      for (auto& r : rows) {
        eq.push_back(std::move(r));
        rhs.push_back(0);
      }
    }
  }
}

std::string cache_file(const std::string& dir, const Scenario& sc) {
  std::string name = sc.to_string();
  std::replace(name.begin(), name.end(), ';', '_');
  std::replace(name.begin(), name.end(), ':', 'x');
  std::replace(name.begin(), name.end(), '/', '-');
  return (std::filesystem::path(dir) / ("ns-vertices-" + name + ".json")).string();
}

std::optional<std::vector<Vertex>> load_cache(const std::string& path, const Scenario& sc) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    std::vector<Vertex> out;
    for (const auto& v : doc.at("vertices")) {
      Behavior b = behavior_from_json(v.dump());
      if (!(b.scenario() == sc)) return std::nullopt;
      const auto tag_name = v.at("tag").get<std::string>();
      VertexTag tag = tag_name == "local-deterministic" ? VertexTag::LocalDeterministic
                      : tag_name == "nonlocal"          ? VertexTag::Nonlocal
                                                        : VertexTag::Other;
      out.push_back({std::move(b), tag});
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;  // a corrupt cache entry is recomputed
  }
}

void store_cache(const std::string& path, const std::vector<Vertex>& vertices) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : vertices) {
    auto j = nlohmann::json::parse(behavior_to_json(v.behavior));
    j["tag"] = to_string(v.tag);
    list.push_back(std::move(j));
  }
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"vertices", list}}.dump();
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

long ns_dimension(const Scenario& sc) {
  long prod = 1;
  for (std::size_t i = 0; i < sc.parties(); ++i) {
    long s = 1;
    for (std::size_t j = 0; j < sc.inputs(i); ++j) s += static_cast<long>(sc.outputs(i, j)) - 1;
    prod *= s;
  }
  return prod - 1;
}

NsPolytope::NsPolytope(Scenario scenario, PolytopeOptions options)
    : scenario_(std::move(scenario)), options_(std::move(options)), cache_(std::make_shared<Cache>()) {
  ns_equalities(scenario_, eq_, eq_rhs_);
  eq_rank_ = rank(eq_, scenario_.total_entries());
}

long NsPolytope::dimension() const { return ns_dimension(scenario_); }

std::pair<RMatrix, RVector> NsPolytope::inequality_system() const {
  const std::size_t t = ambient_dimension();
  RMatrix a;
  RVector b;
  for (std::size_t k = 0; k < t; ++k) {
    RVector lo(t), hi(t);
    lo[k] = -1;
    hi[k] = 1;
    a.push_back(std::move(lo));
    b.push_back(0);
    a.push_back(std::move(hi));
    b.push_back(1);
  }
  const Rref r = rref(eq_, t);
  for (std::size_t origin : r.row_origin) {
    RVector neg = eq_[origin];
    for (auto& v : neg) v = -v;
    a.push_back(eq_[origin]);
    b.push_back(eq_rhs_[origin]);
    a.push_back(std::move(neg));
    b.push_back(-eq_rhs_[origin]);
  }
  return {std::move(a), std::move(b)};
}

std::size_t NsPolytope::h() const { return 2 * ambient_dimension() + 2 * eq_rank_; }

const std::vector<Vertex>& NsPolytope::vertices() const {
  std::call_once(cache_->once, [this] {
    const std::size_t t = ambient_dimension();
    if (t > options_.max_ambient)
      throw TooLarge("scenario " + scenario_.to_string() + " has " + std::to_string(t) +
                     " table entries, above the enumeration cap of " + std::to_string(options_.max_ambient));
    std::string path;
    if (!options_.cache_dir.empty()) {
      path = cache_file(options_.cache_dir, scenario_);
      if (auto cached = load_cache(path, scenario_)) {
        cache_->vertices = std::move(*cached);
        return;
      }
    }
    std::vector<Vertex> out;
    for (auto& x : standard_form_vertices(eq_, eq_rhs_, t)) {
      Behavior b(scenario_, std::move(x));
      const VertexTag tag = is_deterministic(b) ? VertexTag::LocalDeterministic : VertexTag::Nonlocal;
      out.push_back({std::move(b), tag});
    }
    std::sort(out.begin(), out.end(), canonical_vertex_less);
    if (!path.empty()) store_cache(path, out);
    cache_->vertices = std::move(out);
  });
  return cache_->vertices;
}

void NsPolytope::check_scenario(const Behavior& point) const {
  if (!(point.scenario() == scenario_))
    throw ShapeError("behavior scenario " + point.scenario().to_string() + " does not match polytope scenario " +
                     scenario_.to_string());
}

bool NsPolytope::contains(const Behavior& point) const {
  check_scenario(point);
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (point[k] < 0) return false;
  }
  for (std::size_t r = 0; r < eq_.size(); ++r) {
    Rational s = 0;
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (eq_[r][k] != 0) s += eq_[r][k] * point[k];
    }
    if (s != eq_rhs_[r]) return false;
  }
  return true;
}

bool NsPolytope::is_vertex(const Behavior& point) const {
  if (!contains(point)) return false;
  const std::size_t t = ambient_dimension();
  RMatrix tight = eq_;
  for (std::size_t k = 0; k < t; ++k) {
    if (point[k] != 0) continue;
    RVector unit(t);
    unit[k] = 1;
    tight.push_back(std::move(unit));
  }
  return rank(tight, t) == t;
}

bool NsPolytope::local_contains(const Behavior& point) const {
  check_scenario(point);
  return convex_weights(deterministic_behaviors(scenario_), point).has_value();
}

Rational NsPolytope::nonlocality_cost(const Behavior& point) const {
  check_scenario(point);
  require_valid(point);
  const auto& verts = vertices();
  LinearProgram lp;
  lp.variables = verts.size();
  lp.a.assign(point.size(), RVector(verts.size()));
  lp.b = point.table();
  lp.c.assign(verts.size(), Rational(0));
  for (std::size_t j = 0; j < verts.size(); ++j) {
    for (std::size_t k = 0; k < point.size(); ++k) lp.a[k][j] = verts[j].behavior[k];
    if (verts[j].tag != VertexTag::LocalDeterministic) lp.c[j] = 1;
  }
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) throw InvalidBehavior("behavior is not in the polytope hull");
  return r.objective;
}

std::vector<Behavior> deterministic_behaviors(const Scenario& sc) {
  // Odometer over assignments, party 0 input 0 most significant.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < sc.parties(); ++i)
    for (std::size_t j = 0; j < sc.inputs(i); ++j) slots.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> assignment(sc.parties());
  for (std::size_t i = 0; i < sc.parties(); ++i) assignment[i].assign(sc.inputs(i), 0);
  std::vector<Behavior> out;
  while (true) {
    out.push_back(deterministic(sc, assignment));
    std::size_t s = slots.size();
    while (s-- > 0) {
      auto [i, j] = slots[s];
      if (++assignment[i][j] < sc.outputs(i, j)) break;
      assignment[i][j] = 0;
    }
    if (s == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

bool is_deterministic(const Behavior& b) {
  return std::all_of(b.table().begin(), b.table().end(), [](const Rational& r) { return r == 0 || r == 1; });
}

std::optional<RVector> convex_weights(const std::vector<Behavior>& points, const Behavior& target) {
  if (points.empty()) return std::nullopt;
  LinearProgram lp;
  lp.variables = points.size();
  lp.a.assign(target.size() + 1, RVector(points.size()));
  lp.b = target.table();
  lp.b.push_back(1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != target.size()) throw ShapeError("convex_weights: dimension mismatch");
    for (std::size_t k = 0; k < target.size(); ++k) lp.a[k][j] = points[j][k];
    lp.a[target.size()][j] = 1;
  }
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return std::move(r.x);
}

bool canonical_vertex_less(const Vertex& a, const Vertex& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  return a.behavior.table() > b.behavior.table();
}

}  // namespace boxworld
