#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boxworld {

/// Party/input/output cardinalities of a behavior space.
///
/// Entries of a behavior table are stored in one flat canonical order: input
/// tuples outermost (lexicographic, party 0 most significant), and inside each
/// input block the output tuples (lexicographic, party 0 most significant).
/// Because the output count may depend on the input, blocks differ in size.
class Scenario {
 public:
  /// `outputs[i][j]` is the number of outcomes of input j of party i.
  explicit Scenario(std::vector<std::vector<std::size_t>> outputs);

  /// Bell-style (m_A, m_B, v_A, v_B) bipartite scenario.
  static Scenario bipartite(std::size_t inputs_a, std::size_t inputs_b,
                            std::size_t outputs_a, std::size_t outputs_b);
  /// Single party with `inputs` settings of `outputs` outcomes each.
  static Scenario single(std::size_t inputs, std::size_t outputs);

  /// Parses "m:v;m:v" (uniform outputs per party), "v1/v2/v3" per party for
  /// input-dependent outputs, or the Bell shorthand "mA,mB,vA,vB".
  static Scenario parse(std::string_view text);

  std::size_t parties() const { return outputs_.size(); }
  std::size_t inputs(std::size_t party) const { return outputs_.at(party).size(); }
  std::size_t outputs(std::size_t party, std::size_t input) const { return outputs_.at(party).at(input); }
  const std::vector<std::vector<std::size_t>>& output_counts() const { return outputs_; }

  /// True when some input has a single outcome (allowed for trivial extending systems).
  bool has_trivial_inputs() const;

  /// Ambient dimension t = prod_i sum_j v_ij, which is also the table length.
  std::size_t total_entries() const { return offsets_.back(); }
  std::size_t input_tuples() const { return offsets_.size() - 1; }

  std::size_t block_offset(std::size_t input_tuple) const { return offsets_[input_tuple]; }
  std::size_t block_size(std::size_t input_tuple) const {
    return offsets_[input_tuple + 1] - offsets_[input_tuple];
  }

  std::vector<std::size_t> decode_inputs(std::size_t input_tuple) const;
  std::size_t encode_inputs(std::span<const std::size_t> x) const;
  std::vector<std::size_t> decode_outputs(std::size_t input_tuple, std::size_t output_tuple) const;
  std::size_t encode_outputs(std::span<const std::size_t> x, std::span<const std::size_t> a) const;

  /// Flat index of p(a|x).
  std::size_t entry(std::span<const std::size_t> x, std::span<const std::size_t> a) const;
  std::size_t entry(std::initializer_list<std::size_t> x, std::initializer_list<std::size_t> a) const;

  /// Parties of `*this` followed by parties of `other`.
  Scenario concat(const Scenario& other) const;
  /// The scenario restricted to `kept` parties, in increasing party order.
  Scenario restrict_to(std::span<const std::size_t> kept) const;

  /// Round-trippable textual form in the "m:v;..." / "v1/v2" syntax.
  std::string to_string() const;

  bool operator==(const Scenario& other) const { return outputs_ == other.outputs_; }

 private:
  std::vector<std::vector<std::size_t>> outputs_;
  std::vector<std::size_t> offsets_;
};

}  // namespace boxworld
