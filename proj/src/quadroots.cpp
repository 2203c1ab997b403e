#include "quaddiv/quadroots.hpp"

#include <algorithm>
#include <memory>
#include <tuple>
#include <string>

#include "quaddiv/parallel.hpp"

namespace quaddiv {

namespace {

u64 mod_floor(i64 a, u64 m) {
  i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

// Inverse of a modulo m for gcd(a, m) = 1.
u64 inverse_mod(u64 a, u64 m) {
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    i128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace

DeltaDecomposition decompose_delta(i64 b, i64 c) {
  require(b < c, "degenerate polynomial: need b < c");
  i128 diff = static_cast<i128>(c) - static_cast<i128>(b);
  require(diff % 2 == 0, "delta not an integer: b and c must have the same parity");

  DeltaDecomposition dec;
  dec.b = b;
  dec.c = c;
  i128 r = diff / 2;
  if (r > 0xFFFFFFFFll) fail(ErrorKind::Overflow, "delta = r^2 exceeds 64 bits");
  dec.r = static_cast<u64>(r);
  dec.delta = dec.r * dec.r;
  dec.shift = static_cast<i64>((static_cast<i128>(b) + static_cast<i128>(c)) / 2);

  u64 odd = dec.r;
  unsigned v2 = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++v2;
  }
  dec.t_half = v2;
  dec.t = 2 * v2;
  dec.omega = odd;
  dec.omega_factors = factorize(odd);
  dec.c_star = std::max<i64>(1, checked_add<i64>(c, 1, "c*"));
  return dec;
}

DeltaDecomposition decompose_delta_value(u64 delta) {
  require(delta >= 1, "delta must be positive");
  u64 r = static_cast<u64>(isqrt(delta));
  require(r * r == delta, "delta must be a perfect square (delta = (b-c)^2/4)");
  return decompose_delta(-static_cast<i64>(r), static_cast<i64>(r));
}

u64 rho_prime_power(u64 p, unsigned alpha, const DeltaDecomposition& dec) {
  if (alpha == 0) return 1;
  if (p == 2) {
    const unsigned t = dec.t, th = dec.t_half;
    if (alpha <= t) return ipow(2, alpha / 2);
    if (alpha == t + 1) return ipow(2, th);
    if (alpha == t + 2) return ipow(2, th + 1);
    return ipow(2, th + 2);
  }
  const unsigned half = dec.half_exponent(p);
  if (half == 0) return 2;  // p does not divide 2r
  const unsigned beta = 2 * half;
  if (alpha <= beta) return ipow(p, alpha / 2);
  return 2 * ipow(p, half);
}

u64 rho(u64 d, const DeltaDecomposition& dec, const SpfTable* table) {
  require(d >= 1, "rho: d must be >= 1");
  u64 out = 1;
  for (const auto& pp : factorize(d, table).factors())
    out = checked_mul(out, rho_prime_power(pp.p, pp.e, dec), "rho");
  return out;
}

u64 rho_bruteforce(u64 d, u64 k, u64 cap) {
  require(d >= 1, "rho_bruteforce: d must be >= 1");
  if (d > cap) fail(ErrorKind::Resource, "rho_bruteforce: modulus " + std::to_string(d) +
                                             " above scan cap " + std::to_string(cap));
  const u64 target = k % d;
  // x^2 mod d maintained incrementally: (x+1)^2 = x^2 + 2x + 1.
  u64 sq = 0, count = 0;
  for (u64 x = 0; x < d; ++x) {
    if (sq == target) ++count;
    u64 step = (2 * x + 1) % d;
    sq = sq >= d - step ? sq - (d - step) : sq + step;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Root enumeration

RootSolver::RootSolver(const DeltaDecomposition& dec, const SpfTable* table)
    : dec_(dec), table_(table) {}

const std::vector<u64>& RootSolver::shifted_roots_prime_power(u64 q) {
  if (auto it = cache_.find(q); it != cache_.end()) return it->second;
  if (q > kRootScanCap)
    fail(ErrorKind::Resource, "roots_mod: prime power " + std::to_string(q) +
                                  " above direct-scan cap");
  const u64 target = dec_.delta % q;
  const u64 shift = mod_floor(dec_.shift, q);
  std::vector<u64> roots;
  u64 sq = 0;
  for (u64 y = 0; y < q; ++y) {
    if (sq == target) roots.push_back((y + shift) % q);
    u64 step = (2 * y + 1) % q;
    sq = sq >= q - step ? sq - (q - step) : sq + step;
  }
  std::sort(roots.begin(), roots.end());
  return cache_.emplace(q, std::move(roots)).first->second;
}

RootSet RootSolver::roots_mod(u64 d) {
  require(d >= 1, "roots_mod: d must be >= 1");
  RootSet acc{1, {0}};
  for (const auto& pp : factorize(d, table_).factors()) {
    const u64 q = ipow(pp.p, pp.e);
    const auto& local = shifted_roots_prime_power(q);
    const u64 m = acc.modulus;
    // x = a (mod m), x = b (mod q)  =>  x = a + m * ((b - a) * m^{-1} mod q).
    const u64 inv = inverse_mod(m % q, q);
    std::vector<u64> next;
    next.reserve(acc.roots.size() * local.size());
    for (u64 a : acc.roots) {
      for (u64 b : local) {
        u64 diff = (b + q - a % q) % q;
        u64 k = static_cast<u64>(static_cast<u128>(diff) * inv % q);
        next.push_back(a + m * k);
      }
    }
    std::sort(next.begin(), next.end());
    acc.modulus = m * q;
    acc.roots = std::move(next);
  }
  return acc;
}

RootSet roots_mod(u64 d, const DeltaDecomposition& dec) {
  RootSolver solver(dec);
  return solver.roots_mod(d);
}

u64 count_roots_in_range(u64 x, const RootSet& rs) {
  const u64 d = rs.modulus;
  u64 total = 0;
  for (u64 r : rs.roots) {
    const u64 first = r == 0 ? d : r;  // smallest m >= 1 in this class
    if (first <= x) total += (x - first) / d + 1;
  }
  return total;
}

u64 count_roots_in_range(u64 x, u64 d, const DeltaDecomposition& dec) {
  if (x == 0) return 0;
  return count_roots_in_range(x, roots_mod(d, dec));
}

// ---------------------------------------------------------------------------
// Partial sums

namespace {

struct TableRef {
  std::unique_ptr<SpfTable> owned;
  const SpfTable* ptr = nullptr;
};

TableRef ensure_table(u64 N, const SpfTable* table) {
  TableRef ref;
  if (table != nullptr && table->covers(N)) {
    ref.ptr = table;
  } else {
    ref.owned = std::make_unique<SpfTable>(std::max<u64>(N, 2));
    ref.ptr = ref.owned.get();
  }
  return ref;
}

u64 rho_from_table(u64 lambda, const DeltaDecomposition& dec, const SpfTable& t) {
  u64 out = 1;
  while (lambda > 1) {
    const u64 p = t.spf(lambda);
    unsigned e = 0;
    while (lambda % p == 0) {
      lambda /= p;
      ++e;
    }
    out *= rho_prime_power(p, e, dec);
  }
  return out;
}

}  // namespace

std::vector<u64> rho_values(u64 N, const DeltaDecomposition& dec, const SpfTable* table) {
  auto ref = ensure_table(N, table);
  std::vector<u64> out(N);
  for (u64 l = 1; l <= N; ++l) out[l - 1] = rho_from_table(l, dec, *ref.ptr);
  return out;
}

u64 rho_partial_sum(u64 N, const DeltaDecomposition& dec, const SpfTable* table,
                    unsigned threads) {
  require(N >= 1, "rho_partial_sum: N must be >= 1");
  auto ref = ensure_table(N, table);
  const SpfTable& t = *ref.ptr;
  return parallel_sum(1, N, threads, [&](u64 lo, u64 hi) {
    u64 s = 0;
    for (u64 l = lo; l <= hi; ++l) s = checked_add(s, rho_from_table(l, dec, t), "rho sum");
    return s;
  });
}

double rho_over_lambda_sum(u64 N, const DeltaDecomposition& dec, const SpfTable* table) {
  require(N >= 1, "rho_over_lambda_sum: N must be >= 1");
  auto ref = ensure_table(N, table);
  CompensatedSum sum;
  for (u64 l = 1; l <= N; ++l)
    sum.add(static_cast<double>(rho_from_table(l, dec, *ref.ptr)) / static_cast<double>(l));
  return sum.value();
}

}  // namespace quaddiv
