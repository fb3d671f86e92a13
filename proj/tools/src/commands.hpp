#pragma once

#include <optional>
#include <string>
#include <vector>

#include "context.hpp"

namespace boxworld::cli {

struct ReproduceOptions {
  std::string figure;
  std::string out_dir;
  std::size_t grid = 21;
  std::vector<std::string> overlays;  ///< external upper-bound curves joined into the hull
  std::optional<std::string> family;  ///< (param, behavior) list for nsdi-3222-partial
  std::vector<std::size_t> dks = {2, 3, 4};
  std::size_t ds = 64;
  double alpha = 1.0 / 22.0;
  std::vector<double> qs = {1.0, 0.75, 0.5, 0.25};
};

inline const std::vector<std::string> kFigures = {"nsdi-2222", "nsdi-3222-partial", "ppt-overhead", "mdi-tradeoff"};

/// Writes the figure's CSV bundle into out_dir plus `manifest.json`.
void reproduce(Context& ctx, const ReproduceOptions& opt);

}  // namespace boxworld::cli
