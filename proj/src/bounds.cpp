#include "quaddiv/bounds.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "quaddiv/divisor_sums.hpp"

namespace quaddiv {

namespace {

void require_odd(u64 omega) { require(omega >= 1 && omega % 2 == 1, "omega must be odd and positive"); }

void require_condition(u64 omega) {
  if (!condition_check(omega).passes) fail(ErrorKind::HypothesisNotMet, kConditionFailsMessage);
}

}  // namespace

ConditionCheck condition_check(u64 omega) {
  require_odd(omega);
  ConditionCheck out;
  out.omega = omega;
  out.sigma_m1 = sigma(-1, omega);
  out.passes = out.sigma_m1 <= Rational(4, 3);
  return out;
}

double big_c(u64 omega) {
  require_odd(omega);
  double sum = 0.0;
  for (u64 d : divisors(omega)) {
    const u64 k = omega / d;
    const double inner = 2.0 * sigma(0, k).to_double() - 1.749 * sigma(-1, k).to_double() + 1.332;
    sum += inner / static_cast<double>(d);
  }
  return 2.0 * sum;
}

double big_c2(u64 omega) {
  require_odd(omega);
  double sum = 0.0;
  for (u64 d : divisors(omega)) {
    const u64 q = 2 * (omega / d);
    const double inner = 1.166 * (1.0 - theta(-1, q).to_double()) + theta(0, q).to_double();
    sum += inner / static_cast<double>(d);
  }
  return 2.0 * sum;
}

Rational c1(u64 omega) {
  require_odd(omega);
  require_condition(omega);
  Rational sum(0);
  for (u64 d : divisors(omega)) {
    const Rational term = Rational(1) - theta(-1, 2 * (omega / d));
    sum += term * Rational(1, static_cast<i128>(d));
  }
  return sum;
}

double ramare_rhs(double x) {
  require(x >= 1.0, "ramare_rhs: x must be >= 1");
  return kSixOverPiSquared * std::log(x) + 1.166;
}

RamareCheck verify_ramare(u64 limit) {
  require(limit >= 1, "verify_ramare: limit must be >= 1");
  std::vector<std::uint8_t> squarefree(limit + 1, 1);
  for (u64 k = 2; k * k <= limit; ++k)
    for (u64 j = k * k; j <= limit; j += k * k) squarefree[j] = 0;

  RamareCheck out;
  out.min_margin = std::numeric_limits<double>::infinity();
  CompensatedSum sum;
  for (u64 x = 1; x <= limit; ++x) {
    if (squarefree[x]) sum.add(1.0 / static_cast<double>(x));
    const double margin = ramare_rhs(static_cast<double>(x)) - sum.value();
    ++out.checked;
    if (margin < out.min_margin) {
      out.min_margin = margin;
      out.argmin = x;
    }
    if (margin < 0.0 && out.holds) {
      out.holds = false;
      out.first_violation = x;
    }
  }
  return out;
}

double rho_sum_upper(double X, u64 omega) {
  require(X >= 1.0, "rho_sum_upper: X must be >= 1");
  require_odd(omega);
  require_condition(omega);
  return kSixOverPiSquared * X * std::log(X) + big_c(omega) * X;
}

double rho_over_lambda_upper(double X, u64 omega) {
  require(X >= 1.0, "rho_over_lambda_upper: X must be >= 1");
  require_odd(omega);
  require_condition(omega);
  const double C = big_c(omega);
  const double l = std::log(X);
  return kThreeOverPiSquared * l * l + (kSixOverPiSquared + C) * l + C;
}

double theorem3_upper(double N, double X, double c_omega) {
  const double l = std::log(X);
  return 2.0 * N * (kThreeOverPiSquared * l * l + (kSixOverPiSquared + c_omega) * l + c_omega) +
         2.0 * X * (kSixOverPiSquared * l + c_omega);
}

BoundReport theorem3_bound(i64 b, i64 c, i64 N, unsigned threads) {
  const auto dec = decompose_delta(b, c);
  require_condition(dec.omega);
  BoundReport rep;
  rep.b = b;
  rep.c = c;
  rep.N = N;
  rep.delta = dec.delta;
  rep.omega = dec.omega;
  rep.t = dec.t;
  rep.c_star = dec.c_star;
  rep.c_omega = big_c(dec.omega);
  rep.c1_omega = c1(dec.omega);
  if (N < dec.c_star) {
    rep.empty_range = true;
    rep.exact = 0;
    rep.dominates = true;
    return rep;
  }
  const long double f = static_cast<long double>(static_cast<i128>(N) - b) *
                        static_cast<long double>(static_cast<i128>(N) - c);
  rep.X = static_cast<double>(std::sqrt(f));
  rep.bound = theorem3_upper(static_cast<double>(N), rep.X, rep.c_omega);
  rep.exact = tau_quad_sum_exact(b, c, N, threads);
  rep.dominates = rep.bound >= static_cast<double>(rep.exact);
  return rep;
}

double corollary4_rho_bound(double N) {
  require(N >= 1.0, "corollary4_rho_bound: N must be >= 1");
  const double l = std::log(N);
  return kThreeOverPiSquared * l * l + 2.774 * l + 2.166;
}

double corollary4_tau_bound(double N) {
  require(N >= 1.0, "corollary4_tau_bound: N must be >= 1");
  const double l = std::log(N);
  return N * (kSixOverPiSquared * l * l + 5.548 * l + 4.332);
}

DominanceReport dominance_report(i64 b, i64 c, i64 N, unsigned threads) {
  DominanceReport rep;
  rep.theorem3 = theorem3_bound(b, c, N, threads);
  rep.dominates = rep.theorem3.dominates;
  if (b == -1 && c == 1 && N >= 1) {
    // Sum starts at n = 2 since tau(0) is undefined; it coincides with S(N).
    rep.corollary4_bound = corollary4_tau_bound(static_cast<double>(N));
    rep.corollary4_dominates = *rep.corollary4_bound >= static_cast<double>(rep.theorem3.exact);
    rep.dominates = rep.dominates && rep.corollary4_dominates;
  }
  return rep;
}

}  // namespace quaddiv
