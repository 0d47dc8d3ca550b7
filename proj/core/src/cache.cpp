#include "heckez/cache.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace heckez::cache {

namespace fs = std::filesystem;

std::string directory() {
  const char* d = std::getenv("HECKEZ_CACHE_DIR");
  return d ? std::string(d) : std::string();
}

std::optional<std::string> load(const std::string& name) {
  std::string dir = directory();
  if (dir.empty()) return std::nullopt;
  fs::path p = fs::path(dir) / (name + ".json");
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    auto j = nlohmann::json::parse(text);
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
      return std::nullopt;
  } catch (...) {
    return std::nullopt;
  }
  return text;
}

void store(const std::string& name, const std::string& json_text) {
  std::string dir = directory();
  if (dir.empty()) return;
  auto j = nlohmann::json::parse(json_text);
  if (!j.contains("schema_version"))
    throw std::logic_error("cache::store: entry missing schema_version");
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path final_path = fs::path(dir) / (name + ".json");
  fs::path tmp_path = fs::path(dir) / (name + ".json.tmp");
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) return;
    out << json_text;
  }
  fs::rename(tmp_path, final_path, ec);
}

}  // namespace heckez::cache
