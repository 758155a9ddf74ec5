#pragma once

#include <compare>
#include <string>

#include "esch/numeric.hpp"

namespace esch {

// Exact fraction with 64-bit checked arithmetic.  Always reduced, den > 0.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n) : num(n), den(1) {}
  Rational(i64 n, i64 d) {
    if (d == 0) throw error(errc::zero_modulus, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i64 g = gcd_i64(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d;
  }

  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    i64 g = gcd_i64(a.den, b.den);
    i64 bd = b.den / g;
    return Rational(add_i64(mul_i64(a.num, bd), mul_i64(b.num, a.den / g)), mul_i64(a.den, bd));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }
  friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    i64 g1 = gcd_i64(a.num, b.den);
    i64 g2 = gcd_i64(b.num, a.den);
    return Rational(mul_i64(a.num / g1, b.num / g2), mul_i64(a.den / g2, b.den / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw error(errc::zero_modulus, "rational division by zero");
    return a * Rational(b.den, b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // cross-multiplication is safe with checked mul
    i64 lhs = mul_i64(a.num, b.den);
    i64 rhs = mul_i64(b.num, a.den);
    return lhs <=> rhs;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace esch
