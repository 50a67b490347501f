#include "cli/cache_store.hpp"

#include <cstdlib>
#include <fstream>
#include <system_error>

namespace permpat::cli {

namespace fs = std::filesystem;
using nlohmann::json;

CacheStore::CacheStore(fs::path path, std::string tool_version)
    : path_(std::move(path)), version_(std::move(tool_version)) {
  std::error_code ec;
  if (!fs::exists(path_, ec)) return;
  std::ifstream in(path_);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput("cache file " + path_.string() + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_object())
    throw InvalidInput("cache file " + path_.string() + " has no 'entries' object");
  entries_ = std::move(doc["entries"]);
}

std::string CacheStore::key(const RestrictionSpec& spec, int n, Method method) {
  return spec.text() + "|" + std::to_string(n) + "|" + std::string(name(method));
}

std::optional<std::uint64_t> CacheStore::get(const RestrictionSpec& spec, int n, Method method) const {
  auto it = entries_.find(key(spec, n, method));
  if (it == entries_.end()) return std::nullopt;
  return it->at("count").get<std::uint64_t>();
}

void CacheStore::put(const RestrictionSpec& spec, int n, Method method, std::uint64_t value) {
  const auto k = key(spec, n, method);
  if (auto it = entries_.find(k); it != entries_.end()) {
    const auto old = it->at("count").get<std::uint64_t>();
    if (old != value)
      throw CacheConflict("cache conflict for " + k + ": stored " + std::to_string(old) + " (version " +
                          it->value("version", "?") + "), computed " + std::to_string(value));
    return;
  }
  entries_[k] = {{"count", value}, {"version", version_}};
  dirty_ = true;
}

void CacheStore::save() {
  if (!dirty_) return;
  if (path_.has_parent_path()) fs::create_directories(path_.parent_path());
  fs::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << json{{"format", 1}, {"entries", entries_}}.dump(1) << '\n';
    if (!out) throw Error("failed writing cache file " + tmp.string());
  }
  fs::rename(tmp, path_);
  dirty_ = false;
}

fs::path default_cache_path() {
  if (const char* env = std::getenv("PERMPAT_CACHE"); env && *env) return env;
  return ".permpat-cache.json";
}

std::uint64_t cached_count(CacheStore* store, const RestrictionSpec& spec, int n, const EnumerationOptions& opts) {
  if (store) {
    if (auto hit = store->get(spec, n, Method::brute)) return *hit;
  }
  const auto value = count(n, spec, opts);
  if (store) store->put(spec, n, Method::brute, value);
  return value;
}

}  // namespace permpat::cli
