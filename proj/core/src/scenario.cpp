#include "boxworld/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "boxworld/error.hpp"

namespace boxworld {

namespace {

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ShapeError("malformed scenario '" + std::string(whole) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Scenario::Scenario(std::vector<std::vector<std::size_t>> outputs) : outputs_(std::move(outputs)) {
  if (outputs_.empty()) throw ShapeError("scenario needs at least one party");
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    if (outputs_[i].empty())
      throw ShapeError("party " + std::to_string(i) + " has no inputs");
    for (std::size_t v : outputs_[i]) {
      if (v == 0) throw ShapeError("party " + std::to_string(i) + " has an input with zero outputs");
    }
  }

  // Input tuples in lexicographic order, party 0 most significant.
  std::size_t tuples = 1;
  for (const auto& party : outputs_) tuples *= party.size();
  offsets_.assign(tuples + 1, 0);
  std::vector<std::size_t> x(outputs_.size(), 0);
  for (std::size_t k = 0; k < tuples; ++k) {
    std::size_t block = 1;
    for (std::size_t i = 0; i < outputs_.size(); ++i) block *= outputs_[i][x[i]];
    offsets_[k + 1] = offsets_[k] + block;
    for (std::size_t i = outputs_.size(); i-- > 0;) {
      if (++x[i] < outputs_[i].size()) break;
      x[i] = 0;
    }
  }
}

Scenario Scenario::bipartite(std::size_t inputs_a, std::size_t inputs_b, std::size_t outputs_a,
                             std::size_t outputs_b) {
  return Scenario({std::vector<std::size_t>(inputs_a, outputs_a), std::vector<std::size_t>(inputs_b, outputs_b)});
}

Scenario Scenario::single(std::size_t inputs, std::size_t outputs) {
  return Scenario({std::vector<std::size_t>(inputs, outputs)});
}

Scenario Scenario::parse(std::string_view text) {
  if (text.empty()) throw ShapeError("empty scenario");
  const bool party_syntax = text.find(';') != std::string_view::npos || text.find(':') != std::string_view::npos ||
                            text.find('/') != std::string_view::npos;
  if (!party_syntax) {
    auto parts = split(text, ',');
    if (parts.size() != 4)
      throw ShapeError("scenario '" + std::string(text) + "' is neither 'mA,mB,vA,vB' nor 'm:v;m:v'");
    return bipartite(parse_count(parts[0], text), parse_count(parts[1], text), parse_count(parts[2], text),
                     parse_count(parts[3], text));
  }
  std::vector<std::vector<std::size_t>> outputs;
  for (auto party : split(text, ';')) {
    if (party.empty()) continue;
    if (auto colon = party.find(':'); colon != std::string_view::npos) {
      outputs.emplace_back(parse_count(party.substr(0, colon), text), parse_count(party.substr(colon + 1), text));
    } else {
      std::vector<std::size_t> per_input;
      for (auto v : split(party, '/')) per_input.push_back(parse_count(v, text));
      outputs.push_back(std::move(per_input));
    }
  }
  return Scenario(std::move(outputs));
}

bool Scenario::has_trivial_inputs() const {
  return std::any_of(outputs_.begin(), outputs_.end(), [](const auto& party) {
    return std::find(party.begin(), party.end(), std::size_t{1}) != party.end();
  });
}

std::vector<std::size_t> Scenario::decode_inputs(std::size_t input_tuple) const {
  if (input_tuple >= input_tuples()) throw ShapeError("input tuple index out of range");
  std::vector<std::size_t> x(outputs_.size());
  for (std::size_t i = outputs_.size(); i-- > 0;) {
    x[i] = input_tuple % outputs_[i].size();
    input_tuple /= outputs_[i].size();
  }
  return x;
}

std::size_t Scenario::encode_inputs(std::span<const std::size_t> x) const {
  if (x.size() != outputs_.size()) throw ShapeError("input tuple has wrong arity");
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= outputs_[i].size()) throw ShapeError("input index out of range");
    k = k * outputs_[i].size() + x[i];
  }
  return k;
}

std::vector<std::size_t> Scenario::decode_outputs(std::size_t input_tuple, std::size_t output_tuple) const {
  auto x = decode_inputs(input_tuple);
  if (output_tuple >= block_size(input_tuple)) throw ShapeError("output tuple index out of range");
  std::vector<std::size_t> a(outputs_.size());
  for (std::size_t i = outputs_.size(); i-- > 0;) {
    const std::size_t v = outputs_[i][x[i]];
    a[i] = output_tuple % v;
    output_tuple /= v;
  }
  return a;
}

std::size_t Scenario::encode_outputs(std::span<const std::size_t> x, std::span<const std::size_t> a) const {
  if (a.size() != outputs_.size() || x.size() != outputs_.size()) throw ShapeError("output tuple has wrong arity");
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t v = outputs_[i].at(x[i]);
    if (a[i] >= v) throw ShapeError("output index out of range");
    k = k * v + a[i];
  }
  return k;
}

std::size_t Scenario::entry(std::span<const std::size_t> x, std::span<const std::size_t> a) const {
  return offsets_[encode_inputs(x)] + encode_outputs(x, a);
}

std::size_t Scenario::entry(std::initializer_list<std::size_t> x, std::initializer_list<std::size_t> a) const {
  return entry(std::span<const std::size_t>(x.begin(), x.size()), std::span<const std::size_t>(a.begin(), a.size()));
}

Scenario Scenario::concat(const Scenario& other) const {
  auto outputs = outputs_;
  outputs.insert(outputs.end(), other.outputs_.begin(), other.outputs_.end());
  return Scenario(std::move(outputs));
}

Scenario Scenario::restrict_to(std::span<const std::size_t> kept) const {
  std::vector<std::size_t> sorted(kept.begin(), kept.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw ShapeError("cannot restrict to an empty party set");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ShapeError("duplicate party index");
  std::vector<std::vector<std::size_t>> outputs;
  for (std::size_t p : sorted) {
    if (p >= outputs_.size()) throw ShapeError("party index out of range");
    outputs.push_back(outputs_[p]);
  }
  return Scenario(std::move(outputs));
}

std::string Scenario::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < outputs_.size(); ++i) {
    if (i) os << ';';
    const auto& party = outputs_[i];
    if (std::all_of(party.begin(), party.end(), [&](std::size_t v) { return v == party.front(); })) {
      os << party.size() << ':' << party.front();
    } else {
      for (std::size_t j = 0; j < party.size(); ++j) os << (j ? "/" : "") << party[j];
    }
  }
  return os.str();
}

}  // namespace boxworld
