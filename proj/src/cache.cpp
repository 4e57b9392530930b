#include "rgraph/cache.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "rgraph/json_io.hpp"

namespace fs = std::filesystem;

namespace rgraph {

namespace {
constexpr const char* kLayoutVersion = "v1";

// Keys are short hex-ish strings already, but keep filenames safe anyway.
std::string sanitize(const std::string& key) {
  std::string out;
  out.reserve(key.size());
  for (char c : key) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
        c == '.')
      out += c;
    else
      out += '_';
  }
  return out;
}
}  // namespace

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {}

DiskCache DiskCache::from_env_or(const std::string& fallback) {
  if (const char* env = std::getenv("RGRAPH_CACHE_DIR"); env && *env)
    return DiskCache(env);
  return DiskCache(fallback);
}

std::string DiskCache::path_for(const std::string& key) const {
  return (fs::path(dir_) / kLayoutVersion / (sanitize(key) + ".json")).string();
}

std::optional<Diagram> DiskCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  const auto path = path_for(key);
  std::error_code ec;
  if (!fs::exists(path, ec) || ec) return std::nullopt;
  try {
    return load_diagram_file(path);
  } catch (...) {
    return std::nullopt;  // corrupt entry: treat as a miss
  }
}

void DiskCache::store(const std::string& key, const Diagram& d) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(fs::path(dir_) / kLayoutVersion, ec);
  if (ec) return;
  const auto path = path_for(key);
  const auto tmp = path + ".tmp";
  try {
    save_diagram_file(tmp, d);
    fs::rename(tmp, path, ec);
  } catch (...) {
    fs::remove(tmp, ec);
  }
}

}  // namespace rgraph
