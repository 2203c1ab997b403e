#pragma once

#include <cstdint>
#include <string>

#include "quaddiv/error.hpp"

namespace quaddiv {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

template <typename T>
T checked_add(T a, T b, const char* what = "addition") {
  T out;
  if (__builtin_add_overflow(a, b, &out))
    fail(ErrorKind::Overflow, std::string("integer overflow in ") + what);
  return out;
}

template <typename T>
T checked_sub(T a, T b, const char* what = "subtraction") {
  T out;
  if (__builtin_sub_overflow(a, b, &out))
    fail(ErrorKind::Overflow, std::string("integer overflow in ") + what);
  return out;
}

template <typename T>
T checked_mul(T a, T b, const char* what = "multiplication") {
  T out;
  if (__builtin_mul_overflow(a, b, &out))
    fail(ErrorKind::Overflow, std::string("integer overflow in ") + what);
  return out;
}

/// Narrowing cast that aborts instead of truncating.
template <typename To, typename From>
To checked_cast(From v, const char* what = "narrowing") {
  To out = static_cast<To>(v);
  if (static_cast<From>(out) != v || ((out < To{}) != (v < From{})))
    fail(ErrorKind::Overflow, std::string("value out of range in ") + what);
  return out;
}

/// floor(sqrt(n)) for 128-bit n.
inline u128 isqrt(u128 n) {
  if (n < 2) return n;
  // Newton iteration from an upper bound.
  u128 x = n;
  int bits = 0;
  for (u128 t = n; t; t >>= 1) ++bits;
  x = u128{1} << ((bits + 1) / 2);
  while (true) {
    u128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

inline u128 ceil_isqrt(u128 n) {
  u128 s = isqrt(n);
  return s * s == n ? s : s + 1;
}

inline bool is_perfect_square(u128 n) {
  u128 s = isqrt(n);
  return s * s == n;
}

std::string to_string(i128 v);
std::string to_string(u128 v);

}  // namespace quaddiv
