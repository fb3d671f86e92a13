#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "boxworld/distribution.hpp"

namespace boxworld {

struct IntrinsicConfig {
  std::size_t max_outputs = 0;   ///< |F| cap for the descent; 0 means |E|
  std::size_t restarts = 32;     ///< random starting channels for the descent
  std::size_t refine = 4;        ///< best deterministic candidates also used as descent starts
  std::size_t max_iterations = 400;
  double tolerance = 1e-11;      ///< stop when an iteration improves by less
  std::uint64_t seed = 0x5eedULL;
  bool descent = true;           ///< false keeps only identity, constant and the merge path
};

struct IntrinsicResult {
  double value = 0;  ///< I(A:B|F) of the witness; an upper estimate of I(A:B down E)
  StochasticChannel channel = StochasticChannel::identity(1);
  std::size_t iterations = 0;
  bool converged = true;
  std::string method;  ///< "identity", "constant", "merge" or "descent"
};

/// Upper estimate of the intrinsic information min_channel I(A:B|F).
///
/// Candidates: identity, constant, every channel on the greedy pairwise
/// label-merging path, then exponentiated-gradient descent over column-
/// stochastic channels from the best candidates and from seeded random starts.
/// The result never exceeds I(A:B|E) or I(A:B).
IntrinsicResult intrinsic_information(const TripartiteDistribution& p, const IntrinsicConfig& config = {});

/// Cheapest stage only: identity, constant and the greedy merge path.
IntrinsicResult intrinsic_information_screen(const TripartiteDistribution& p);

}  // namespace boxworld
