#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "quaddiv/bounds.hpp"
#include "quaddiv/divisor_sums.hpp"

using namespace quaddiv;

TEST_CASE("tau of a product from two factorizations") {
  const SpfTable t(5000);
  for (u64 u = 1; u <= 300; ++u)
    for (u64 v = 1; v <= 300; v += 7) REQUIRE(tau_of_product(u, v, t) == oracle::divisor_count(u * v));
}

TEST_CASE("exact S(N) examples") {
  CHECK(tau_quad_sum_exact(-1, 1, 5) == 18);
  CHECK(tau_quad_sum_exact(1, 3, 6) == 10);
  CHECK(tau_quad_sum_exact(-2, 2, 3) == 2);
  CHECK(tau_quad_sum_exact(-1, 1, 10) == 54);
  CHECK(tau_quad_sum_exact(-1, 1, 1) == 0);
  CHECK(tau_quad_sum_exact(0, 6, 6) == 0);
  CHECK_THROWS_AS(tau_quad_sum_exact(0, 1, 10), Error);
  const SpfTable small(20);
  CHECK_THROWS_AS(tau_quad_sum_exact(-1, 1, 100, small), Error);
}

TEST_CASE("hyperbola S(N) examples") {
  CHECK(tau_quad_sum_hyperbola(decompose_delta(-1, 1), 5) == 18);
  CHECK(tau_quad_sum_hyperbola(decompose_delta(0, 6), 8) == 7);
  CHECK(tau_quad_sum_hyperbola(decompose_delta(0, 6), 6) == 0);
  CHECK(tau_quad_sum_hyperbola(decompose_delta(-1, 1), 1) == 0);
}

TEST_CASE("both paths agree with the trial-division oracle") {
  for (i64 b = -6; b <= 6; ++b)
    for (i64 c = b + 2; c <= 6; c += 2) {
      const auto dec = decompose_delta(b, c);
      const auto exact = tau_quad_prefix_exact(b, c, 2000);
      const auto hyper = tau_quad_prefix_hyperbola(dec, 2000);
      for (i64 N = dec.c_star - 1; N <= 2000; ++N) {
        REQUIRE(exact.at(N) == hyper.at(N));
        if (N % 250 == 0 || N == 2000) {
          const u64 want = oracle::tau_quad_sum(b, c, N);
          REQUIRE(exact.at(N) == want);
          REQUIRE(tau_quad_sum_exact(b, c, N) == want);
          REQUIRE(tau_quad_sum_hyperbola(dec, N) == want);
        }
      }
    }
}

TEST_CASE("prefix sums are monotone and start with tau(f(c*))") {
  for (auto [b, c] : {std::pair<i64, i64>{-1, 1}, {0, 6}, {-9, 5}, {3, 7}}) {
    const auto dec = decompose_delta(b, c);
    const auto pre = tau_quad_prefix_exact(b, c, 3000);
    CHECK(pre.first == dec.c_star - 1);
    CHECK(pre.at(dec.c_star - 1) == 0);
    CHECK(pre.at(dec.c_star) ==
          oracle::divisor_count(static_cast<u64>((dec.c_star - b) * (dec.c_star - c))));
    for (i64 N = pre.first + 1; N <= pre.last(); ++N) REQUIRE(pre.at(N) >= pre.at(N - 1));
    CHECK(pre.at(dec.c_star - 50) == 0);
    CHECK_THROWS_AS(pre.at(3001), Error);
  }
}

TEST_CASE("exact sum does not depend on thread count") {
  const u64 one = tau_quad_sum_exact(-3, 3, 300000, 1);
  CHECK(tau_quad_sum_exact(-3, 3, 300000, 4) == one);
  CHECK(tau_quad_sum_exact(-3, 3, 300000, 7) == one);
  CHECK(tau_quad_prefix_exact(-3, 3, 300000).at(300000) == one);
}

TEST_CASE("asymptotic scan rows") {
  auto scan = asymptotic_scan(-1, 1, {10});
  REQUIRE(scan.rows.size() == 1);
  CHECK(scan.rows[0].exact == 54);
  CHECK(scan.rows[0].ratio == doctest::Approx(54.0 / (10.0 * std::log(10.0) * std::log(10.0))));
  CHECK_FALSE(scan.fit.has_value());

  scan = asymptotic_scan(-1, 1, {2, 4, 8});
  REQUIRE(scan.rows.size() == 3);
  CHECK(scan.rows[0].exact <= scan.rows[1].exact);
  CHECK(scan.rows[1].exact <= scan.rows[2].exact);

  CHECK_THROWS_AS(asymptotic_scan(-1, 1, {}), Error);
  CHECK_THROWS_AS(asymptotic_scan(-1, 1, {8, 4}), Error);
  CHECK_THROWS_AS(asymptotic_scan(-1, 1, {8, 8}), Error);
}

TEST_CASE("ratio bracket for n^2 - 1") {
  std::vector<i64> grid;
  for (i64 N = 1000; N <= 1000000; N += 999) grid.push_back(N);
  const auto scan = asymptotic_scan(-1, 1, grid);
  for (const auto& row : scan.rows) {
    REQUIRE(row.ratio >= kSixOverPiSquared);
    REQUIRE(row.ratio <= 2.0);
  }
}

TEST_CASE("fit recovers synthetic models") {
  auto synth = [](double a, double b2, double c3) {
    std::vector<double> ns, vs;
    for (int k = 10; k <= 22; ++k) {
      const double N = std::ldexp(1.0, k), L = std::log(N);
      ns.push_back(N);
      vs.push_back(a * N * L * L + b2 * N * L + c3 * N);
    }
    return fit_leading_terms(ns, vs);
  };
  const auto f1 = synth(0.6, 0.0, 0.0);
  CHECK(f1.a == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(std::fabs(f1.b2) < 1e-9);
  CHECK(std::fabs(f1.c3) < 1e-9);

  const auto f2 = synth(0.6, 1.2, 0.0);
  CHECK(f2.a == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(f2.b2 == doctest::Approx(1.2).epsilon(1e-9));
  CHECK(std::fabs(f2.c3) < 1e-9);
}

TEST_CASE("fit on a scan table stores its result") {
  // Integer rows carry rounding, so recovery is only approximate here.
  ScanTable t;
  for (int k = 10; k <= 22; ++k) {
    const double N = std::ldexp(1.0, k), L = std::log(N);
    t.rows.push_back({static_cast<i64>(N), static_cast<u64>(std::llround(0.6 * N * L * L)), 0.0});
  }
  const auto f = fit_leading_coefficient(t);
  REQUIRE(t.fit.has_value());
  CHECK(t.fit->a == f.a);
  CHECK(f.a == doctest::Approx(0.6).epsilon(1e-6));
}

TEST_CASE("fit rejects degenerate tables") {
  ScanTable two;
  two.rows = {{10, 54, 0.0}, {20, 200, 0.0}};
  CHECK_THROWS_AS(fit_leading_coefficient(two), Error);
  ScanTable dup;
  dup.rows = {{10, 54, 0.0}, {10, 54, 0.0}, {10, 54, 0.0}};
  CHECK_THROWS_AS(fit_leading_coefficient(dup), Error);
  CHECK_THROWS_AS(least_squares({{1, 2, 3}, {2, 4, 6}}, {1, 2, 3}), Error);
  const auto sol = least_squares({{1, 1, 1, 1}, {0, 1, 2, 3}}, {1, 3, 5, 7});
  CHECK(sol[0] == doctest::Approx(1.0));
  CHECK(sol[1] == doctest::Approx(2.0));
}
