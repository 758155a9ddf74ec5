#pragma once

#include <compare>
#include <string>

#include "esch/numeric.hpp"

namespace esch {

// An element of the circle group Q/Z, i.e. the root of unity e^{2*pi*i*num/den}.
// Stored reduced with 0 <= num < den.  Angle addition is multiplication of
// circle elements; the zero angle is the identity.
struct RationalAngle {
  i64 num = 0;
  i64 den = 1;

  RationalAngle() = default;
  RationalAngle(i64 n, i64 d) {
    if (d == 0) throw error(errc::zero_modulus, "angle with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    i64 g = gcd_i64(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d;
  }

  static RationalAngle zero() { return RationalAngle(); }
  static RationalAngle half() { return RationalAngle(1, 2); }

  bool is_zero() const { return num == 0; }
  // multiplicative order of the corresponding root of unity
  i64 order() const { return den; }

  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
    i64 g = gcd_i64(a.den, b.den);
    i64 bd = b.den / g;
    return RationalAngle(add_i64(mul_i64(a.num, bd), mul_i64(b.num, a.den / g)), mul_i64(a.den, bd));
  }
  friend RationalAngle operator-(const RationalAngle& a) { return RationalAngle(-a.num, a.den); }
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) { return a + (-b); }
  // integer multiple k*a (the circle element raised to the k-th power)
  friend RationalAngle operator*(i64 k, const RationalAngle& a) {
    i64 g = gcd_i64(k, a.den);
    return RationalAngle(mul_i64(k / g, a.num), a.den / g);
  }

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    i64 lhs = mul_i64(a.num, b.den);
    i64 rhs = mul_i64(b.num, a.den);
    return lhs <=> rhs;
  }

  // eigenvalue-angle representative in [0, 1/2]
  RationalAngle folded() const {
    if (2 * num > den) return -(*this);
    return *this;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace esch
