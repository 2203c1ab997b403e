#include <doctest.h>

#include "quaddiv/checked.hpp"
#include "quaddiv/rational.hpp"

using namespace quaddiv;

TEST_CASE("rational normalization and printing") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(7).str() == "7");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic and ordering") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a > b);
  CHECK(Rational(4, 3) <= Rational(4, 3));
  CHECK(Rational(13, 9) > Rational(4, 3));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(a / Rational(0), Error);
}

TEST_CASE("rational overflow is detected") {
  const i128 big = static_cast<i128>(1) << 100;
  CHECK_THROWS_AS(Rational(big) * Rational(big), Error);
}

TEST_CASE("checked helpers") {
  CHECK(checked_add<u64>(1, 2) == 3);
  CHECK_THROWS_AS(checked_add<u64>(~u64{0}, 1), Error);
  CHECK_THROWS_AS(checked_sub<u64>(0, 1), Error);
  CHECK_THROWS_AS(checked_mul<i64>(i64{1} << 62, 4), Error);
  CHECK(checked_cast<std::uint32_t>(u64{7}) == 7u);
  CHECK_THROWS_AS(checked_cast<std::uint32_t>(u64{1} << 40), Error);
  CHECK_THROWS_AS(checked_cast<u64>(i64{-1}), Error);
  for (u64 n = 0; n < 100000; ++n) {
    const u64 s = static_cast<u64>(isqrt(n));
    REQUIRE(s * s <= n);
    REQUIRE((s + 1) * (s + 1) > n);
    const u64 cs = static_cast<u64>(ceil_isqrt(n));
    REQUIRE(cs * cs >= n);
    REQUIRE((cs == 0 || (cs - 1) * (cs - 1) < n));
  }
  const u128 big = (u128{1} << 100) + 12345;
  const u128 s = isqrt(big);
  CHECK(s * s <= big);
  CHECK((s + 1) * (s + 1) > big);
  CHECK(is_perfect_square(u128{1} << 120));
  CHECK_FALSE(is_perfect_square((u128{1} << 120) + 1));
  CHECK(to_string(static_cast<i128>(-12345)) == "-12345");
  CHECK(to_string(u128{1} << 64) == "18446744073709551616");
}
