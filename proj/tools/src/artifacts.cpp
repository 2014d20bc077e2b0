#include "artifacts.hpp"

#include "advect/version.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <chrono>
#include <fstream>

namespace advect::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(fmt::format("cannot open {} for writing", path.string()));
  file << content;
  file.flush();
  if (!file) throw IoError(fmt::format("write to {} failed", path.string()));
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

std::filesystem::path write_artifact(const OutputContext& out, const std::string& verb,
                                     const std::string& name, const std::string& content,
                                     const nlohmann::ordered_json& config) {
  std::error_code ec;
  std::filesystem::create_directories(out.dir, ec);
  if (ec) throw IoError(fmt::format("cannot create {}: {}", out.dir.string(), ec.message()));

  const std::filesystem::path path = out.dir / name;
  write_file(path, content);

  nlohmann::ordered_json manifest;
  manifest["artifact"] = name;
  manifest["verb"] = verb;
  manifest["invocation"] = out.invocation;
  manifest["config"] = config;
  manifest["library_version"] = kLibraryVersion;
  manifest["timestamp"] = out.timestamp ? nlohmann::ordered_json(utc_timestamp()) : nullptr;
  write_file(out.dir / (name + ".manifest.json"), manifest.dump(2) + "\n");
  return path;
}

}  // namespace advect::cli
