#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "quaddiv/spf_cache.hpp"

using namespace quaddiv;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const char* name) {
  auto dir = fs::temp_directory_path() / "quaddiv-tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("round trip through the binary format") {
  const auto dir = scratch_dir("roundtrip");
  const SpfTable t(10000);
  const auto file = dir / "t.bin";
  write_spf_table(file, t);
  CHECK(fs::file_size(file) == 4 + 8 + 4 * 10001);
  const auto back = read_spf_table(file);
  CHECK(back.limit() == 10000);
  CHECK(std::equal(back.raw().begin(), back.raw().end(), t.raw().begin(), t.raw().end()));
}

TEST_CASE("header layout is magic then little-endian limit") {
  const auto dir = scratch_dir("layout");
  const auto file = dir / "t.bin";
  write_spf_table(file, SpfTable(258));
  std::ifstream is(file, std::ios::binary);
  unsigned char h[16];
  is.read(reinterpret_cast<char*>(h), 16);
  CHECK(h[0] == 'S');
  CHECK(h[1] == 'P');
  CHECK(h[2] == 'F');
  CHECK(h[3] == '1');
  CHECK(h[4] == 2);
  CHECK(h[5] == 1);
  for (int i = 6; i < 12; ++i) CHECK(h[i] == 0);
  // entry for n = 0 follows
  CHECK(spf_cache_file(dir, 258).filename() == "spf-258.bin");
}

TEST_CASE("corrupt files are rejected") {
  const auto dir = scratch_dir("corrupt");
  const auto file = dir / "bad.bin";
  {
    std::ofstream os(file, std::ios::binary);
    os << "NOPE0000000000000000";
  }
  CHECK_THROWS_AS(read_spf_table(file), Error);
  write_spf_table(file, SpfTable(100));
  fs::resize_file(file, 40);
  CHECK_THROWS_AS(read_spf_table(file), Error);
  CHECK_THROWS_AS(read_spf_table(dir / "missing.bin"), Error);

  // Internally inconsistent entries.
  std::vector<std::uint32_t> entries(11, 0);
  entries[4] = 3;
  CHECK_THROWS_AS(SpfTable(10, entries), Error);
}

TEST_CASE("cache directory is populated and reused") {
  const auto dir = scratch_dir("env");
  ::setenv(kSpfCacheEnv, dir.c_str(), 1);
  const auto a = cached_spf_table(5000);
  CHECK(fs::exists(spf_cache_file(dir, 5000)));
  const auto b = cached_spf_table(5000);
  CHECK(std::equal(a->raw().begin(), a->raw().end(), b->raw().begin(), b->raw().end()));

  // A damaged cache entry is rebuilt rather than trusted.
  fs::resize_file(spf_cache_file(dir, 5000), 100);
  const auto c = cached_spf_table(5000);
  CHECK(std::equal(a->raw().begin(), a->raw().end(), c->raw().begin(), c->raw().end()));
  CHECK(fs::file_size(spf_cache_file(dir, 5000)) == 4 + 8 + 4 * 5001);
  ::unsetenv(kSpfCacheEnv);

  const auto d = cached_spf_table(300);
  CHECK(d->limit() == 300);
  CHECK_FALSE(fs::exists(spf_cache_file(dir, 300)));
}
