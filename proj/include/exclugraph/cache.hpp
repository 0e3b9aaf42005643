#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <span>
#include <string>

namespace exclugraph {

// Append-only JSON-lines store of report payloads, keyed by
// (graph6 as given, weight hash, command, tolerance).
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  // EXCLUGRAPH_CACHE if set, else ./exclugraph-cache.jsonl.
  static std::filesystem::path default_path();

  static std::string make_key(const std::string& graph6, std::span<const double> weights, const std::string& command,
                              double tolerance);

  // The most recently stored payload for `key`, byte for byte.
  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& payload);

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
};

}  // namespace exclugraph
