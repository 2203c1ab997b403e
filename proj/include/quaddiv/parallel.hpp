#pragma once

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

#include "quaddiv/checked.hpp"

namespace quaddiv {

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Sum chunk(lo, hi) over [first, last] split into `threads` contiguous
/// chunks. Chunk results are added in index order with overflow checks, so
/// the result is independent of the thread count.
template <typename Chunk>
u64 parallel_sum(u64 first, u64 last, unsigned threads, Chunk chunk) {
  if (first > last) return 0;
  u64 span = last - first + 1;
  threads = std::max(1u, threads);
  if (threads == 1 || span < 4096) return chunk(first, last);
  u64 parts = std::min<u64>(threads, span);
  std::vector<std::future<u64>> jobs;
  jobs.reserve(parts);
  for (u64 i = 0; i < parts; ++i) {
    u64 lo = first + span * i / parts;
    u64 hi = first + span * (i + 1) / parts - 1;
    jobs.push_back(std::async(std::launch::async, chunk, lo, hi));
  }
  u64 total = 0;
  for (auto& j : jobs) total = checked_add(total, j.get(), "parallel sum");
  return total;
}

}  // namespace quaddiv
