#include "boxworld/behavior_json.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "boxworld/error.hpp"

namespace boxworld {

using nlohmann::json;

namespace {

json scenario_json(const Scenario& sc) {
  json inputs = json::array();
  json outputs = json::array();
  for (std::size_t i = 0; i < sc.parties(); ++i) {
    inputs.push_back(sc.inputs(i));
    outputs.push_back(sc.output_counts()[i]);
  }
  return {{"inputs", inputs}, {"outputs", outputs}};
}

Scenario scenario_from(const json& j) {
  if (!j.is_object() || !j.contains("outputs")) throw ShapeError("scenario object needs an 'outputs' field");
  auto outputs = j.at("outputs").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("inputs")) {
    auto inputs = j.at("inputs").get<std::vector<std::size_t>>();
    if (inputs.size() != outputs.size()) throw ShapeError("scenario inputs/outputs disagree on party count");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (inputs[i] != outputs[i].size()) throw ShapeError("scenario inputs/outputs disagree for party " + std::to_string(i));
    }
  }
  return Scenario(std::move(outputs));
}

Rational entry_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    // Shortest decimal that round-trips, so 0.1 reads as 1/10 rather than its binary expansion.
    char buf[512];
    const auto r = std::to_chars(buf, buf + sizeof buf, j.get<double>(), std::chars_format::fixed);
    if (r.ec != std::errc()) throw ShapeError("table entry out of range");
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(r.ptr - buf)));
  }
  throw ShapeError("table entries must be numbers or rational strings");
}

}  // namespace

std::string behavior_to_json(const Behavior& b, int indent) {
  const Scenario& sc = b.scenario();
  json table = json::array();
  for (std::size_t xi = 0; xi < sc.input_tuples(); ++xi) {
    json row = json::array();
    for (std::size_t k = 0; k < sc.block_size(xi); ++k) row.push_back(format_rational(b[sc.block_offset(xi) + k]));
    table.push_back(std::move(row));
  }
  json doc = {{"scenario", scenario_json(sc)}, {"table", std::move(table)}};
  return doc.dump(indent);
}

Behavior behavior_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ShapeError(std::string("behavior JSON: ") + e.what());
  }
  try {
    Scenario sc = scenario_from(doc.at("scenario"));
    const json& table = doc.at("table");
    std::vector<Rational> flat;
    flat.reserve(sc.total_entries());
    for (const auto& row : table) {
      if (row.is_array()) {
        for (const auto& v : row) flat.push_back(entry_from(v));
      } else {
        flat.push_back(entry_from(row));
      }
    }
    return Behavior(std::move(sc), std::move(flat));
  } catch (const json::exception& e) {
    throw ShapeError(std::string("behavior JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

Behavior read_behavior_file(const std::string& path) { return behavior_from_json(read_text_file(path)); }

}  // namespace boxworld
