#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include <boxworld/polytope.hpp>

namespace boxworld::cli {

/// State shared by one invocation: the reproducibility key and every file written.
struct Context {
  Context(std::ostream& o, std::ostream& e, std::vector<std::string> a) : out(o), err(e), args(std::move(a)) {}

  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> args;
  std::string command;  ///< e.g. "nsce build"
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  PolytopeOptions polytope;
  std::string manifest_id;  ///< hash of (tool, version, command, params, seed)
  std::string started;
  std::vector<std::pair<std::string, std::string>> written;  ///< (path, sha256)
};

/// Computes ctx.manifest_id from the invocation key; timestamps are excluded.
void seal(Context& ctx);

/// Writes `content` to `path` and records its hash, or prints it when no path is given.
void emit(Context& ctx, const std::optional<std::string>& path, const std::string& content);

/// Writes the manifest for every recorded file to `path`; no-op if nothing was written.
void write_manifest(Context& ctx, const std::string& path);

/// Manifest path beside an output file.
std::string manifest_path_for(const std::string& output);

/// CSV text: a `# manifest <id>` line, the header, then rows.
std::string csv(const Context& ctx, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

/// Shortest round-trip decimal form of a double.
std::string num(double v);

/// JSON text with the manifest id attached as a top-level key.
std::string json_text(const Context& ctx, nlohmann::json j);

}  // namespace boxworld::cli
