#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace genrest {

/// Element keys, class partition and tagged subgroup index sets persisted per
/// (family, q). Files are versioned JSON with an embedded content hash; a
/// failed hash or shape check makes the loader report a miss so the caller
/// rebuilds transparently.
struct GroupCacheData {
    std::string family;
    int q = 0;
    std::vector<uint64_t> keys;
    std::vector<std::vector<int>> classes;
    // tagged subgroup index sets
    std::vector<int> borel, torus, unipotent, center;
};

std::string group_cache_path(const std::string& dir, const std::string& family, int q);

std::optional<GroupCacheData> load_group_cache(const std::string& dir, const std::string& family, int q);

/// Writes the cache file, creating the directory if needed. Serialization is
/// canonical: identical data produces byte-identical files.
void store_group_cache(const std::string& dir, const GroupCacheData& data);

/// FNV-1a over the canonical payload; exposed for tests.
uint64_t cache_content_hash(const std::string& payload);

} // namespace genrest
