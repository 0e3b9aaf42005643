#include "exclugraph/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace exclugraph {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// FNV-1a over the %.17g rendering of each weight.
std::string weight_hash(std::span<const double> weights) {
  std::uint64_t h = 14695981039346656037ull;
  for (double w : weights) {
    for (char c : format_double(w) + ",") {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::filesystem::path ResultCache::default_path() {
  if (const char* env = std::getenv("EXCLUGRAPH_CACHE"); env && *env) return env;
  return "exclugraph-cache.jsonl";
}

std::string ResultCache::make_key(const std::string& graph6, std::span<const double> weights,
                                  const std::string& command, double tolerance) {
  return graph6 + "\t" + weight_hash(weights) + "\t" + command + "\t" + format_double(tolerance);
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  std::ifstream in(path_);
  std::optional<std::string> hit;
  std::string line;
  while (std::getline(in, line)) {
    auto record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) continue;
    if (record.value("key", "") == key) hit = record.value("payload", "");
  }
  return hit;
}

void ResultCache::store(const std::string& key, const std::string& payload) {
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  out << nlohmann::json{{"key", key}, {"payload", payload}}.dump() << '\n';
}

}  // namespace exclugraph
