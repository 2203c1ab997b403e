#pragma once

#include <unordered_map>
#include <vector>

#include "quaddiv/arith.hpp"

namespace quaddiv {

/// Shape data of f(n) = (n - b)(n - c) with b < c of equal parity:
/// delta = ((c - b) / 2)^2 = r^2 = 2^t * omega^2, omega odd, t even.
struct DeltaDecomposition {
  i64 b = 0;
  i64 c = 0;
  u64 delta = 0;
  u64 r = 0;
  unsigned t = 0;
  unsigned t_half = 0;
  u64 omega = 1;
  Factorization omega_factors;
  i64 c_star = 1;
  /// (b + c) / 2; f(n) = (n - shift)^2 - delta.
  i64 shift = 0;

  /// beta' for odd p: the exponent of p in omega (so p^(2 beta') || delta).
  unsigned half_exponent(u64 p) const { return omega_factors.exponent_of(p); }
};

DeltaDecomposition decompose_delta(i64 b, i64 c);

/// Decomposition for x^2 - delta, i.e. (b, c) = (-r, r). delta must be a
/// positive perfect square.
DeltaDecomposition decompose_delta_value(u64 delta);

/// rho_delta(p^alpha) from the prime-power closed forms; alpha = 0 gives 1.
u64 rho_prime_power(u64 p, unsigned alpha, const DeltaDecomposition& dec);

u64 rho(u64 d, const DeltaDecomposition& dec, const SpfTable* table = nullptr);

inline constexpr u64 kBruteforceCap = 10'000'000;

/// #{0 <= x < d : x^2 = k (mod d)} by direct scan. Valid for any k.
u64 rho_bruteforce(u64 d, u64 k, u64 cap = kBruteforceCap);

struct RootSet {
  u64 modulus = 1;
  std::vector<u64> roots;  // sorted residues in [0, modulus)
};

/// Largest prime power whose roots are found by direct scan.
inline constexpr u64 kRootScanCap = 1'000'000;

/// Roots of f(m) = 0 (mod d). Roots modulo each prime power are found by a
/// direct scan and memoized; moduli are combined by CRT in ascending order.
class RootSolver {
 public:
  explicit RootSolver(const DeltaDecomposition& dec, const SpfTable* table = nullptr);

  RootSet roots_mod(u64 d);

  const DeltaDecomposition& decomposition() const { return dec_; }

 private:
  const std::vector<u64>& shifted_roots_prime_power(u64 q);

  DeltaDecomposition dec_;
  const SpfTable* table_;
  std::unordered_map<u64, std::vector<u64>> cache_;
};

RootSet roots_mod(u64 d, const DeltaDecomposition& dec);

/// M(x, d) = #{1 <= m <= x : f(m) = 0 (mod d)}.
u64 count_roots_in_range(u64 x, const RootSet& roots);
u64 count_roots_in_range(u64 x, u64 d, const DeltaDecomposition& dec);

/// rho(lambda) for lambda = 1..N (index 0 holds lambda = 1).
std::vector<u64> rho_values(u64 N, const DeltaDecomposition& dec,
                            const SpfTable* table = nullptr);

/// Exact sum_{lambda <= N} rho(lambda), termwise.
u64 rho_partial_sum(u64 N, const DeltaDecomposition& dec,
                    const SpfTable* table = nullptr, unsigned threads = 1);

/// sum_{lambda <= N} rho(lambda) / lambda with compensated summation.
double rho_over_lambda_sum(u64 N, const DeltaDecomposition& dec,
                           const SpfTable* table = nullptr);

}  // namespace quaddiv
