// Content-addressed on-disk cache for character tables and L-values.
// Records are written to a temp file and renamed into place, so concurrent
// readers see either the old or the new complete record; a checksum guards
// against torn or corrupted payloads.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ampsum/common.hpp"

namespace ampsum {

struct CacheKey {
    std::string kind;     // "char_table", "l_value", ...
    i64 modulus = 0;
    i64 index = 0;
    std::string grid;     // e.g. an s-grid point rendered to text
    // toolkit version is mixed into the address automatically
};

class Cache {
  public:
    // resolution order: explicit dir, AMPSUM_CACHE_DIR, ./ampsum_cache
    explicit Cache(std::string dir = "");

    const std::string& directory() const { return dir_; }

    void put(const CacheKey& key, const std::string& payload);
    // nullopt on miss; CacheCorrupt is self-healing: the record is dropped
    // and nullopt returned so callers recompute and overwrite
    std::optional<std::string> get(const CacheKey& key);

    std::string address(const CacheKey& key) const;  // content address (hex)

  private:
    std::string dir_;
};

}  // namespace ampsum
