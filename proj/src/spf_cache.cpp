#include "quaddiv/spf_cache.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>
#include <thread>

namespace quaddiv {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'P', 'F', '1'};

template <typename T>
void put_le(std::ostream& os, T v) {
  std::array<char, sizeof(T)> buf;
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(buf.data(), buf.size());
}

template <typename T>
T get_le(const unsigned char* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_spf_table(const std::filesystem::path& path, const SpfTable& table) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) fail(ErrorKind::Resource, "cannot open " + path.string() + " for writing");
  os.write(kMagic.data(), kMagic.size());
  put_le<u64>(os, table.limit());
  for (std::uint32_t e : table.raw()) put_le<std::uint32_t>(os, e);
  if (!os) fail(ErrorKind::Resource, "write failed for " + path.string());
}

SpfTable read_spf_table(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorKind::Resource, "cannot open " + path.string());
  std::array<unsigned char, 12> header{};
  is.read(reinterpret_cast<char*>(header.data()), header.size());
  require(is.gcount() == static_cast<std::streamsize>(header.size()), "spf file truncated header");
  require(std::memcmp(header.data(), kMagic.data(), kMagic.size()) == 0, "spf file: bad magic");
  const u64 limit = get_le<u64>(header.data() + 4);
  require(limit >= 2 && limit <= SpfTable::kMaxLimit, "spf file: limit out of range");

  std::vector<unsigned char> bytes((limit + 1) * 4);
  is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  require(is.gcount() == static_cast<std::streamsize>(bytes.size()), "spf file truncated body");
  std::vector<std::uint32_t> entries(limit + 1);
  for (u64 i = 0; i <= limit; ++i) entries[i] = get_le<std::uint32_t>(bytes.data() + 4 * i);
  return SpfTable(limit, std::move(entries));
}

std::filesystem::path spf_cache_file(const std::filesystem::path& dir, u64 limit) {
  return dir / ("spf-" + std::to_string(limit) + ".bin");
}

std::shared_ptr<const SpfTable> cached_spf_table(u64 limit) {
  const char* env = std::getenv(kSpfCacheEnv);
  if (env == nullptr || *env == '\0') return std::make_shared<const SpfTable>(limit);

  const auto file = spf_cache_file(env, limit);
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    try {
      auto t = std::make_shared<const SpfTable>(read_spf_table(file));
      if (t->limit() == limit) return t;
    } catch (const Error&) {
      // unreadable cache entry: rebuild and overwrite below
    }
  }
  auto t = std::make_shared<const SpfTable>(limit);
  // Written under a unique temporary name, then renamed into place.
  const auto tag = std::hash<std::thread::id>{}(std::this_thread::get_id()) ^
                   static_cast<std::size_t>(std::chrono::steady_clock::now().time_since_epoch().count());
  auto tmp = file;
  tmp += ".tmp" + std::to_string(tag);
  try {
    std::filesystem::create_directories(env, ec);
    write_spf_table(tmp, *t);
    std::filesystem::rename(tmp, file, ec);
  } catch (const Error&) {
  }
  std::filesystem::remove(tmp, ec);
  return t;
}

}  // namespace quaddiv
