#include "quaddiv/verify.hpp"

#include <cmath>
#include <sstream>

#include "quaddiv/bounds.hpp"
#include "quaddiv/dirichlet.hpp"
#include "quaddiv/divisor_sums.hpp"
#include "quaddiv/quadroots.hpp"

namespace quaddiv {

namespace {

bool full(VerifyLevel l) { return l == VerifyLevel::Full; }

void expect(SuiteResult& res, bool ok, const std::string& what) {
  ++res.checks;
  if (!ok) {
    ++res.failures;
    if (res.notes.size() < 20) res.notes.push_back("FAIL " + what);
  }
}

SuiteResult rho_oracle(VerifyLevel level) {
  SuiteResult res{"rho-oracle", 0, 0, {}};
  const u64 max_d = full(level) ? 5000 : 1000;
  const u64 max_r = full(level) ? 16 : 8;
  const SpfTable table(max_d);
  for (u64 r = 1; r <= max_r; ++r) {
    const auto dec = decompose_delta(-static_cast<i64>(r), static_cast<i64>(r));
    u64 bad = 0;
    for (u64 d = 1; d <= max_d; ++d)
      if (rho(d, dec, &table) != rho_bruteforce(d, dec.delta)) ++bad;
    res.checks += max_d - 1;
    expect(res, bad == 0, "rho vs brute force, r=" + std::to_string(r));
  }

  const u64 max_roots = full(level) ? 2000 : 300;
  for (auto [b, c] : {std::pair<i64, i64>{-1, 1}, {-2, 2}, {0, 6}}) {
    const auto dec = decompose_delta(b, c);
    RootSolver solver(dec, &table);
    u64 bad = 0;
    for (u64 d = 1; d <= max_roots; ++d)
      if (solver.roots_mod(d).roots.size() != rho(d, dec, &table)) ++bad;
    res.checks += max_roots - 1;
    expect(res, bad == 0,
           "|roots_mod| vs rho for (" + std::to_string(b) + "," + std::to_string(c) + ")");
  }
  return res;
}

SuiteResult convolution(VerifyLevel level) {
  SuiteResult res{"convolution", 0, 0, {}};
  const u64 max_x = full(level) ? 10000 : 1000;
  const SpfTable table(max_x);
  for (u64 delta : {1, 4, 9, 16, 36, 100, 144, 225, 900}) {
    const auto dec = decompose_delta_value(delta);
    const auto sweep = verify_identity_upto(max_x, dec, &table);
    res.checks += sweep.checked - 1;
    expect(res, sweep.mismatches == 0,
           "identity for delta=" + std::to_string(delta) + " first mismatch X=" +
               std::to_string(sweep.first_mismatch));
    const auto single = verify_identity(max_x, dec, &table);
    expect(res, single.equal, "double-sum identity at X=" + std::to_string(max_x) +
                                  " delta=" + std::to_string(delta));
  }
  // Two independent routes to xi_d.
  for (auto [omega, d] : {std::pair<u64, u64>{1, 1}, {3, 1}, {3, 3}, {15, 5}, {45, 3}}) {
    const std::size_t len = 1000;
    const auto xi = convolve(CoefficientSeries::mu_squared(len),
                             CoefficientSeries::principal_character(len, 2 * (omega / d)));
    u64 bad = 0;
    for (std::size_t n = 1; n <= len; ++n)
      if (static_cast<u64>(xi(n)) != xi_d(n, omega, d)) ++bad;
    expect(res, bad == 0,
           "convolve vs xi_d, omega=" + std::to_string(omega) + " d=" + std::to_string(d));
  }
  return res;
}

SuiteResult ramare(VerifyLevel level) {
  SuiteResult res{"ramare", 0, 0, {}};
  const u64 limit = full(level) ? 1'000'000 : 100'000;
  const auto check = verify_ramare(limit);
  res.checks = check.checked;
  if (!check.holds) {
    res.failures = 1;
    res.notes.push_back("FAIL first violation at x=" + std::to_string(check.first_violation));
  }
  std::ostringstream os;
  os.precision(12);
  os << "min margin " << check.min_margin << " at x=" << check.argmin;
  res.notes.push_back(os.str());
  return res;
}

SuiteResult c1_suite(VerifyLevel level) {
  SuiteResult res{"c1", 0, 0, {}};
  const u64 max_omega = full(level) ? 10000 : 1000;
  u64 passing = 0;
  double worst_c2 = 0.0;
  for (u64 omega = 1; omega <= max_omega; omega += 2) {
    const double c = big_c(omega);
    const double diff = std::fabs(c - big_c2(omega));
    worst_c2 = std::max(worst_c2, diff);
    expect(res, diff <= 1e-12, "C2 == C at omega=" + std::to_string(omega));
    expect(res, c > 0.0, "C > 0 at omega=" + std::to_string(omega));
    if (!condition_check(omega).passes) continue;
    ++passing;
    const Rational v = c1(omega);
    expect(res, v > Rational(0) && v <= Rational(1, 2),
           "0 < C1 <= 1/2 at omega=" + std::to_string(omega) + " (C1=" + v.str() + ")");
  }
  for (auto [omega, pass] : {std::pair<u64, bool>{3, true}, {9, false}, {25, true}, {55, true},
                             {15, false}}) {
    expect(res, condition_check(omega).passes == pass,
           "condition verdict at omega=" + std::to_string(omega));
  }
  res.notes.push_back(std::to_string(passing) + " odd omega satisfy the condition");
  std::ostringstream os;
  os << "max |C - C2| = " << worst_c2;
  res.notes.push_back(os.str());
  return res;
}

SuiteResult euler(VerifyLevel level) {
  SuiteResult res{"euler", 0, 0, {}};
  const u64 max_r = full(level) ? 100 : 30;
  for (u64 r = 1; r <= max_r; ++r) {
    const auto dec = decompose_delta(-static_cast<i64>(r), static_cast<i64>(r));
    expect(res, euler_factor_at_one(2, dec) == Rational(3), "A_2(1) = 3, r=" + std::to_string(r));
    for (u64 p = 3; p <= 97; p += 2) {
      if (!is_prime(p)) continue;
      const i128 q = static_cast<i128>(p);
      expect(res, euler_factor_at_one(p, dec) == Rational(q + 1, q - 1),
             "A_p(1), p=" + std::to_string(p) + " r=" + std::to_string(r));
    }
    expect(res, g_at_one(dec) == Rational(1), "G(1) = 1, r=" + std::to_string(r));
    expect(res, k_at_one(dec.t) == Rational(2), "K(1) = 2, r=" + std::to_string(r));
  }
  for (unsigned t = 0; t <= 40; t += 2) {
    expect(res, k_at_one(t) == Rational(2), "K(1) = 2, t=" + std::to_string(t));
    for (u64 X = 1; X <= (u64{1} << 50); X *= 3)
      expect(res, k_partial_at_one(t, X) <= Rational(2), "partial K <= 2, t=" + std::to_string(t));
  }
  return res;
}

SuiteResult dominance(VerifyLevel level) {
  SuiteResult res{"dominance", 0, 0, {}};
  const i64 box = full(level) ? 10 : 6;
  const i64 n_max = full(level) ? 10000 : 1000;
  for (i64 b = -box; b <= box; ++b) {
    for (i64 c = b + 2; c <= box; c += 2) {
      const auto dec = decompose_delta(b, c);
      if (!condition_check(dec.omega).passes) continue;
      const double C = big_c(dec.omega);
      const auto exact = tau_quad_prefix_exact(b, c, n_max);
      const auto hyper = tau_quad_prefix_hyperbola(dec, n_max);
      u64 violations = 0, mismatches = 0;
      for (i64 N = dec.c_star; N <= n_max; ++N) {
        const double X = std::sqrt(static_cast<double>((N - b) * (N - c)));
        if (theorem3_upper(static_cast<double>(N), X, C) < static_cast<double>(exact.at(N)))
          ++violations;
        if (exact.at(N) != hyper.at(N)) ++mismatches;
      }
      const std::string tag = "(" + std::to_string(b) + "," + std::to_string(c) + ")";
      expect(res, violations == 0, "explicit bound dominates S(N) " + tag);
      expect(res, mismatches == 0, "hyperbola == factorization " + tag);
    }
  }

  const u64 max_i = full(level) ? 100'000 : 10'000;
  const SpfTable table(max_i);
  for (unsigned s = 0; s <= 3; ++s) {
    const auto dec = decompose_delta_value(u64{1} << (2 * s));
    const auto vals = rho_values(max_i, dec, &table);
    CompensatedSum sum;
    u64 violations = 0;
    for (u64 N = 1; N <= max_i; ++N) {
      sum.add(static_cast<double>(vals[N - 1]) / static_cast<double>(N));
      if (corollary4_rho_bound(static_cast<double>(N)) < sum.value()) ++violations;
    }
    expect(res, violations == 0, "rho/lambda bound for delta=4^" + std::to_string(s));
  }

  const i64 max_ii = full(level) ? 1'000'000 : 100'000;
  const auto s11 = tau_quad_prefix_exact(-1, 1, max_ii);
  u64 violations = 0;
  for (i64 N = 1; N <= max_ii; ++N)
    if (corollary4_tau_bound(static_cast<double>(N)) < static_cast<double>(s11.at(N))) ++violations;
  expect(res, violations == 0, "n^2 - 1 bound");
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rho-oracle", "convolution", "ramare",
                                              "c1",         "euler",       "dominance"};
  return names;
}

SuiteResult run_suite(std::string_view name, VerifyLevel level) {
  if (name == "rho-oracle") return rho_oracle(level);
  if (name == "convolution") return convolution(level);
  if (name == "ramare") return ramare(level);
  if (name == "c1") return c1_suite(level);
  if (name == "euler") return euler(level);
  if (name == "dominance") return dominance(level);
  fail(ErrorKind::InvalidInput, "unknown suite: " + std::string(name));
}

}  // namespace quaddiv
