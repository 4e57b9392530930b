#pragma once

#include <optional>
#include <string>

#include "rgraph/diagram.hpp"

namespace rgraph {

// Content-addressed on-disk store of canonical representatives, keyed by
// canonical key and layout version.  A stale version directory is simply
// ignored.  Disabled when the directory is empty.
class DiskCache {
 public:
  DiskCache() = default;
  explicit DiskCache(std::string dir);

  // Honors RGRAPH_CACHE_DIR; falls back to the given directory.
  static DiskCache from_env_or(const std::string& fallback = "");

  bool enabled() const { return !dir_.empty(); }
  std::optional<Diagram> load(const std::string& key) const;
  void store(const std::string& key, const Diagram& d) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace rgraph
