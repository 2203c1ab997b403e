#include "quaddiv/rational.hpp"

#include <algorithm>

namespace quaddiv {

namespace {

i128 abs128(i128 v) {
  if (v < 0) return checked_sub<i128>(0, v, "rational negation");
  return v;
}

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(0) - static_cast<u128>(v));
  return to_string(static_cast<u128>(v));
}

Rational::Rational(i128 num, i128 den) {
  require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = checked_sub<i128>(0, num, "rational sign normalization");
    den = checked_sub<i128>(0, den, "rational sign normalization");
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

double Rational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) /
                             static_cast<long double>(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::operator-() const {
  return Rational(checked_sub<i128>(0, num_, "rational negation"), den_);
}

Rational& Rational::operator+=(const Rational& o) {
  // Reduce through the gcd of the denominators to keep intermediates small.
  i128 g = gcd128(den_, o.den_);
  i128 lhs = checked_mul<i128>(num_, o.den_ / g, "rational addition");
  i128 rhs = checked_mul<i128>(o.num_, den_ / g, "rational addition");
  i128 den = checked_mul<i128>(den_ / g, o.den_, "rational addition");
  *this = Rational(checked_add<i128>(lhs, rhs, "rational addition"), den);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  i128 g1 = gcd128(num_, o.den_);
  i128 g2 = gcd128(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  i128 num = checked_mul<i128>(num_ / g1, o.num_ / g2, "rational multiplication");
  i128 den = checked_mul<i128>(den_ / g2, o.den_ / g1, "rational multiplication");
  *this = Rational(num, den);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  require(o.num_ != 0, "rational division by zero");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 lhs = checked_mul<i128>(a.num_, b.den_, "rational comparison");
  i128 rhs = checked_mul<i128>(b.num_, a.den_, "rational comparison");
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace quaddiv
