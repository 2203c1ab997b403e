#pragma once

#include <numbers>
#include <optional>

#include "quaddiv/arith.hpp"
#include "quaddiv/quadroots.hpp"
#include "quaddiv/rational.hpp"

namespace quaddiv {

inline constexpr double kSixOverPiSquared = 6.0 / (std::numbers::pi * std::numbers::pi);
inline constexpr double kThreeOverPiSquared = 3.0 / (std::numbers::pi * std::numbers::pi);

inline constexpr const char* kConditionFailsMessage =
    "condition sigma_{-1}(Omega) <= 4/3 fails";

struct ConditionCheck {
  u64 omega = 1;
  Rational sigma_m1;
  bool passes = false;
};

/// Exact test of sigma_{-1}(omega) <= 4/3 for odd omega.
ConditionCheck condition_check(u64 omega);

/// C(omega) = 2 sum_{d | omega} (1/d)(2 sigma_0(omega/d) - 1.749 sigma_{-1}(omega/d) + 1.332).
double big_c(u64 omega);

/// The same constant assembled from its theta form:
/// 2 sum_{d | omega} (1/d)(1.166 (1 - theta_{-1}(2 omega/d)) + theta_0(2 omega/d)).
double big_c2(u64 omega);

/// C_1(omega) = sum_{d | omega} (1/d)(1 - theta_{-1}(2 omega/d)). Requires the condition.
Rational c1(u64 omega);

/// (6/pi^2) ln x + 1.166
double ramare_rhs(double x);

struct RamareCheck {
  bool holds = true;
  u64 checked = 0;
  u64 first_violation = 0;
  double min_margin = 0.0;
  u64 argmin = 1;
};

/// sum_{n <= x} mu^2(n)/n <= ramare_rhs(x) at every integer 1 <= x <= limit.
RamareCheck verify_ramare(u64 limit);

/// (6/pi^2) X ln X + C(omega) X
double rho_sum_upper(double X, u64 omega);

/// (3/pi^2) ln^2 X + (6/pi^2 + C(omega)) ln X + C(omega)
double rho_over_lambda_upper(double X, u64 omega);

/// 2N((3/pi^2) ln^2 X + (6/pi^2 + C) ln X + C) + 2X((6/pi^2) ln X + C)
double theorem3_upper(double N, double X, double c_omega);

struct BoundReport {
  i64 b = 0;
  i64 c = 0;
  i64 N = 0;
  u64 delta = 0;
  u64 omega = 1;
  unsigned t = 0;
  i64 c_star = 1;
  bool empty_range = false;
  double X = 0.0;
  double c_omega = 0.0;
  Rational c1_omega;
  double bound = 0.0;
  u64 exact = 0;
  bool dominates = true;
};

BoundReport theorem3_bound(i64 b, i64 c, i64 N, unsigned threads = 1);

/// (3/pi^2) ln^2 N + 2.774 ln N + 2.166
double corollary4_rho_bound(double N);
/// N ((6/pi^2) ln^2 N + 5.548 ln N + 4.332)
double corollary4_tau_bound(double N);

struct DominanceReport {
  BoundReport theorem3;
  /// Present for (b, c) = (-1, 1): the n^2 - 1 bound and the exact
  /// sum_{n=2}^{N} tau(n^2 - 1) it is compared against.
  std::optional<double> corollary4_bound;
  bool corollary4_dominates = true;
  bool dominates = true;
};

DominanceReport dominance_report(i64 b, i64 c, i64 N, unsigned threads = 1);

}  // namespace quaddiv
