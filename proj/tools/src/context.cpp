#include "context.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>

#include <openssl/evp.h>

#include <boxworld/behavior_json.hpp>
#include <boxworld/error.hpp>

#include "boxworld_cli/cli.hpp"

namespace boxworld::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[digest[i] >> 4];
    s += hex[digest[i] & 15];
  }
  return s;
}

void seal(Context& ctx) {
  const nlohmann::json key = {
      {"tool", "boxworld"}, {"version", kVersion}, {"command", ctx.command}, {"params", ctx.params}, {"seed", ctx.seed}};
  ctx.manifest_id = sha256_hex(key.dump());
  ctx.started = utc_now();
}

void emit(Context& ctx, const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    ctx.out << content;
    if (!content.empty() && content.back() != '\n') ctx.out << '\n';
    return;
  }
  const std::filesystem::path p(*path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  write_text_file(*path, content);
  ctx.written.emplace_back(*path, sha256_hex(content));
}

std::string manifest_path_for(const std::string& output) { return output + ".manifest.json"; }

void write_manifest(Context& ctx, const std::string& path) {
  if (ctx.written.empty()) return;
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& [file, hash] : ctx.written) outputs.push_back({{"path", file}, {"sha256", hash}});
  const nlohmann::json m = {{"manifest_id", ctx.manifest_id},
                            {"tool", "boxworld"},
                            {"version", kVersion},
                            {"command", ctx.command},
                            {"args", ctx.args},
                            {"params", ctx.params},
                            {"seed", ctx.seed},
                            {"threads", ctx.threads},
                            {"started", ctx.started},
                            {"finished", utc_now()},
                            {"outputs", outputs}};
  write_text_file(path, m.dump(2) + "\n");
}

std::string num(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string csv(const Context& ctx, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      s += cells[i];
    }
    return s + "\n";
  };
  std::string s = "# manifest " + ctx.manifest_id + "\n" + line(header);
  for (const auto& r : rows) s += line(r);
  return s;
}

std::string json_text(const Context& ctx, nlohmann::json j) {
  j["manifest_id"] = ctx.manifest_id;
  return j.dump(2) + "\n";
}

}  // namespace boxworld::cli
