#include "krchar/cache.hpp"

#include <fstream>
#include <mutex>

#include <json.hpp>

namespace krc {

namespace {

struct CacheState {
  std::mutex mu;
  std::optional<std::filesystem::path> path;
  bool loaded = false;
  int skipped = 0;
  // (lie_type, op, key) -> value
  std::map<std::tuple<std::string, std::string, std::string>,
           std::map<Weight, long long>>
      entries;
};

CacheState& state() {
  static CacheState s;
  return s;
}

std::optional<std::pair<std::tuple<std::string, std::string, std::string>,
                        std::map<Weight, long long>>>
parse_record(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != kCacheSchemaVersion)
    return std::nullopt;
  if (!j.contains("lie_type") || !j["lie_type"].is_string()) return std::nullopt;
  if (!j.contains("op") || !j["op"].is_string()) return std::nullopt;
  if (!j.contains("key") || !j["key"].is_string()) return std::nullopt;
  if (!j.contains("value") || !j["value"].is_object()) return std::nullopt;
  std::string type_str = j["lie_type"].get<std::string>();
  int rank;
  try {
    rank = LieType::parse(type_str).rank;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::map<Weight, long long> value;
  for (auto it = j["value"].begin(); it != j["value"].end(); ++it) {
    if (!it.value().is_number_integer()) return std::nullopt;
    Weight w;
    try {
      w = Weight::parse(it.key(), rank);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    value[w] = it.value().get<long long>();
  }
  return std::make_pair(std::make_tuple(type_str, j["op"].get<std::string>(),
                                        j["key"].get<std::string>()),
                        std::move(value));
}

void load_locked(CacheState& s) {
  if (s.loaded || !s.path) return;
  s.loaded = true;
  std::ifstream in(*s.path);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = parse_record(line);
    if (!rec) {
      ++s.skipped;
      continue;
    }
    s.entries[rec->first] = std::move(rec->second);
  }
}

}  // namespace

void set_cache_path(std::optional<std::filesystem::path> path) {
  CacheState& s = state();
  std::lock_guard<std::mutex> lock(s.mu);
  s.path = std::move(path);
  s.loaded = false;
  s.skipped = 0;
  s.entries.clear();
}

std::optional<std::filesystem::path> cache_path() {
  CacheState& s = state();
  std::lock_guard<std::mutex> lock(s.mu);
  return s.path;
}

bool cache_enabled() {
  CacheState& s = state();
  std::lock_guard<std::mutex> lock(s.mu);
  return s.path.has_value();
}

std::optional<std::map<Weight, long long>> persistent_lookup(
    const std::string& lie_type, const std::string& op, const std::string& key,
    int rank) {
  CacheState& s = state();
  std::lock_guard<std::mutex> lock(s.mu);
  if (!s.path) return std::nullopt;
  load_locked(s);
  auto it = s.entries.find(std::make_tuple(lie_type, op, key));
  if (it == s.entries.end()) return std::nullopt;
  for (const auto& [w, v] : it->second)
    if (w.rank() != rank) return std::nullopt;
  return it->second;
}

void persistent_store(const std::string& lie_type, const std::string& op,
                      const std::string& key,
                      const std::map<Weight, long long>& value) {
  CacheState& s = state();
  std::lock_guard<std::mutex> lock(s.mu);
  if (!s.path) return;
  load_locked(s);
  auto tup = std::make_tuple(lie_type, op, key);
  if (s.entries.count(tup)) return;
  s.entries[tup] = value;
  nlohmann::json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["lie_type"] = lie_type;
  j["op"] = op;
  j["key"] = key;
  nlohmann::json val = nlohmann::json::object();
  for (const auto& [w, v] : value) val[w.str()] = v;
  j["value"] = std::move(val);
  std::ofstream out(*s.path, std::ios::app);
  if (out) out << j.dump() << "\n";
}

int cache_skipped_records() {
  CacheState& s = state();
  std::lock_guard<std::mutex> lock(s.mu);
  load_locked(s);
  return s.skipped;
}

}  // namespace krc
