#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "krchar/rootdata.hpp"

namespace krc {

// Newline-delimited JSON cache of character computations.  Records carry a
// schema_version and are validated on load; anything malformed or from a
// different schema is skipped, never trusted.
//
// Record shape:
//   {"schema_version":1,"lie_type":"B4","op":"simple","key":"1,0,0,0",
//    "value":{"1,0,0,0":1,...}}

inline constexpr int kCacheSchemaVersion = 1;

void set_cache_path(std::optional<std::filesystem::path> path);
std::optional<std::filesystem::path> cache_path();
bool cache_enabled();

std::optional<std::map<Weight, long long>> persistent_lookup(
    const std::string& lie_type, const std::string& op, const std::string& key,
    int rank);

void persistent_store(const std::string& lie_type, const std::string& op,
                      const std::string& key,
                      const std::map<Weight, long long>& value);

// Number of records skipped as corrupt/foreign during the last load.
int cache_skipped_records();

}  // namespace krc
