#pragma once

#include <vector>

#include "quaddiv/arith.hpp"
#include "quaddiv/quadroots.hpp"
#include "quaddiv/rational.hpp"

namespace quaddiv {

/// Coefficient of 2^{-alpha s} in the 2-part K(s) of the rho Dirichlet series.
u64 a_alpha(unsigned alpha, unsigned t);

/// Principal character modulo 2*omega/d evaluated at l.
int chi_d(u64 l, u64 omega, u64 d);

/// xi_d(n) = sum_{l m = n} mu^2(l) chi_d(m), by divisor enumeration.
u64 xi_d(u64 n, u64 omega, u64 d);

/// sum_{h <= Y} xi_d(h) as sum_{l <= Y} mu^2(l) sum_{m <= Y/l} chi_d(m).
u64 xi_partial_sum(u64 Y, u64 omega, u64 d);

/// Prefix of a Dirichlet series: coefficients of n^{-s} for n = 1..length.
class CoefficientSeries {
 public:
  static constexpr std::size_t kMaxLength = 10'000'000;

  explicit CoefficientSeries(std::vector<i64> coeffs);

  static CoefficientSeries identity(std::size_t length);
  static CoefficientSeries ones(std::size_t length);
  static CoefficientSeries mu_squared(std::size_t length);
  /// Indicator of gcd(n, modulus) = 1.
  static CoefficientSeries principal_character(std::size_t length, u64 modulus);

  std::size_t length() const { return coeffs_.size(); }
  /// 1-based access.
  i64 operator()(std::size_t n) const { return coeffs_[n - 1]; }
  const std::vector<i64>& coeffs() const { return coeffs_; }

  friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

 private:
  std::vector<i64> coeffs_;
};

/// Dirichlet convolution truncated to the common length.
CoefficientSeries convolve(const CoefficientSeries& a, const CoefficientSeries& b);

struct IdentityReport {
  u64 X = 0;
  u64 lhs = 0;
  u64 rhs = 0;
  bool equal = false;
};

/// sum_{lambda <= X} rho(lambda) against
/// sum_{d | omega} sum_{2^alpha d^2 h <= X} a_alpha d xi_d(h).
IdentityReport verify_identity(u64 X, const DeltaDecomposition& dec,
                               const SpfTable* table = nullptr);

struct IdentitySweep {
  u64 checked = 0;
  u64 mismatches = 0;
  u64 first_mismatch = 0;  // 0 when none
};

/// The identity at every X in [1, max_x], lhs from termwise rho and rhs from
/// prefix sums of xi_d built by series convolution.
IdentitySweep verify_identity_upto(u64 max_x, const DeltaDecomposition& dec,
                                   const SpfTable* table = nullptr);

/// A_p(1) = sum_alpha rho(p^alpha) / p^alpha, summed exactly from the
/// prime-power values with the eventually-constant tail in closed form.
Rational euler_factor_at_one(u64 p, const DeltaDecomposition& dec);

/// G(1): the Euler factors at 2 and at odd p | r, each divided by
/// (1 + 1/p) / (1 - 1/p).
Rational g_at_one(const DeltaDecomposition& dec);

/// K(1) = sum_alpha a_alpha / 2^alpha.
Rational k_at_one(unsigned t);

/// sum over alpha with 2^alpha <= X of a_alpha / 2^alpha.
Rational k_partial_at_one(unsigned t, u64 X);

}  // namespace quaddiv
