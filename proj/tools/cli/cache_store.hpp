#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "permpat/enumerate.hpp"
#include "permpat/error.hpp"
#include "permpat/restriction.hpp"

namespace permpat::cli {

class CacheConflict : public Error {
 public:
  using Error::Error;
};

/// File-backed map (canonical spec text, n, method) -> count, stored as one
/// JSON document and rewritten atomically (temp file + rename) on save().
/// A stored value is never replaced by a different one for the same key.
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path path, std::string tool_version);

  std::optional<std::uint64_t> get(const RestrictionSpec& spec, int n, Method method) const;
  /// Throws CacheConflict if a different value is already recorded.
  void put(const RestrictionSpec& spec, int n, Method method, std::uint64_t value);
  void save();

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

  static std::string key(const RestrictionSpec& spec, int n, Method method);

 private:
  std::filesystem::path path_;
  std::string version_;
  nlohmann::json entries_ = nlohmann::json::object();
  bool dirty_ = false;
};

/// --cache flag, else $PERMPAT_CACHE, else .permpat-cache.json in the working directory.
std::filesystem::path default_cache_path();

/// Brute-force count through the cache (reads, and records misses).
std::uint64_t cached_count(CacheStore* store, const RestrictionSpec& spec, int n,
                           const EnumerationOptions& opts);

}  // namespace permpat::cli
