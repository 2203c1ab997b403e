#pragma once

#include <compare>
#include <string>

#include "quaddiv/checked.hpp"

namespace quaddiv {

/// Exact rational with 128-bit numerator and positive denominator, always
/// kept in lowest terms. Every operation is overflow-checked.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i128 num) : num_(num), den_(1) {}  // NOLINT: implicit from integer
  Rational(i128 num, i128 den);

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace quaddiv
