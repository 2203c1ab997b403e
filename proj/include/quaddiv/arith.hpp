#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "quaddiv/checked.hpp"
#include "quaddiv/rational.hpp"

namespace quaddiv {

struct PrimePower {
  u64 p = 0;
  unsigned e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
/// The empty list represents 1.
class Factorization {
 public:
  Factorization() = default;
  /// Validates ordering and exponents; does not test primality.
  explicit Factorization(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const& { return factors_; }
  // On a temporary, hands over the owned vector.
  std::vector<PrimePower> factors() && { return std::move(factors_); }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  /// Exponent of p, 0 when p does not divide.
  unsigned exponent_of(u64 p) const;

  /// The represented integer; throws on 64-bit overflow.
  u64 value() const;

  /// Factorization of the product of the two represented integers.
  static Factorization product(const Factorization& a, const Factorization& b);

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Smallest-prime-factor table for 2 <= n <= limit. Immutable once built.
class SpfTable {
 public:
  static constexpr u64 kMaxLimit = 0xFFFFFFFFull - 1;

  explicit SpfTable(u64 limit);
  /// Adopt an existing table (entries indexed 0..limit). Every entry is checked for
  /// consistency, not for primality.
  SpfTable(u64 limit, std::vector<std::uint32_t> entries);

  u64 limit() const { return limit_; }
  bool covers(u64 n) const { return n <= limit_; }
  std::uint32_t spf(u64 n) const { return spf_[n]; }
  std::uint32_t operator[](u64 n) const { return spf_[n]; }
  std::span<const std::uint32_t> raw() const { return spf_; }

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

SpfTable build_spf_table(u64 limit);

bool is_prime(u64 n);

/// Uses the table when n <= table->limit(), otherwise trial division then
/// Pollard-Brent splitting with a fixed seed.
Factorization factorize(u64 n, const SpfTable* table = nullptr);

u64 tau_of(const Factorization& f);
u64 tau(u64 n, const SpfTable* table = nullptr);

/// sigma_a(n) = sum_{d | n} d^a for a in {-1, 0, 1}, exact.
Rational sigma(int a, u64 n);
Rational sigma(int a, const Factorization& f);

/// theta_a(q) = sum_{d | q, d >= 2} d^a = sigma_a(q) - 1 for a in {-1, 0}.
Rational theta(int a, u64 q);

/// Jacobi symbol (a / n) for odd n >= 1.
int jacobi(i64 a, u64 n);

int mu_squared(u64 n, const SpfTable* table = nullptr);

u64 gcd(u64 a, u64 b);

/// All positive divisors in increasing order.
std::vector<u64> divisors(const Factorization& f);
std::vector<u64> divisors(u64 n);

/// p^e with overflow check.
u64 ipow(u64 p, unsigned e);

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace quaddiv
