#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "quaddiv/arith.hpp"

namespace quaddiv {

/// On-disk SPF table: the 4 bytes "SPF1", the limit as little-endian u64,
/// then limit + 1 little-endian u32 entries for n = 0..limit.
void write_spf_table(const std::filesystem::path& path, const SpfTable& table);
SpfTable read_spf_table(const std::filesystem::path& path);

inline constexpr const char* kSpfCacheEnv = "QUADDIV_SPF_CACHE";

/// File name used inside the cache directory for a given limit.
std::filesystem::path spf_cache_file(const std::filesystem::path& dir, u64 limit);

/// Build the table, or load it from $QUADDIV_SPF_CACHE when that directory is
/// set and holds a table of the same limit. Freshly built tables are written
/// back to the cache; cache I/O failures fall back to building in memory.
std::shared_ptr<const SpfTable> cached_spf_table(u64 limit);

}  // namespace quaddiv
