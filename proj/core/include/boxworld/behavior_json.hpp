#pragma once

#include <string>

#include "boxworld/behavior.hpp"

namespace boxworld {

/// Serializes to `{"scenario":{"inputs":[..],"outputs":[[..]..]},"table":[["p/q",..]..]}`,
/// one inner table row per input tuple in canonical order.
std::string behavior_to_json(const Behavior& behavior, int indent = -1);

/// Exact inverse of behavior_to_json. Table entries may be strings ("1/2", "0.25"),
/// JSON integers, or JSON decimals (read through their shortest round-trip
/// spelling, so 0.1 is 1/10); the table may also be a flat array.
Behavior behavior_from_json(const std::string& text);

Behavior read_behavior_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace boxworld
