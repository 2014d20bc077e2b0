#pragma once

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace advect::cli {

/// Writing an artifact or its manifest failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where and how a verb writes its files.
struct OutputContext {
  std::filesystem::path dir = ".";
  bool timestamp = true;
  std::vector<std::string> invocation;
};

/// UTC "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Writes dir/name and dir/name.manifest.json (invocation, config echo, library version,
/// timestamp or null). Returns the artifact path.
std::filesystem::path write_artifact(const OutputContext& out, const std::string& verb,
                                     const std::string& name, const std::string& content,
                                     const nlohmann::ordered_json& config);

}  // namespace advect::cli
