#pragma once

#include <array>
#include <string>

#include "esch/rational.hpp"

namespace esch {

// Element of the real field Q(sqrt2, sqrt5) in the basis {1, sqrt2, sqrt5, sqrt10}.
// This is the smallest field containing every real part occurring in the
// binary tetrahedral/octahedral/icosahedral quaternions (0, 1, 1/2, sqrt2/2,
// (1 +- sqrt5)/4).
struct FieldElement {
  Rational a, b, c, d;  // a + b*sqrt2 + c*sqrt5 + d*sqrt10

  FieldElement() = default;
  FieldElement(Rational a_, Rational b_ = Rational(0), Rational c_ = Rational(0), Rational d_ = Rational(0))
      : a(a_), b(b_), c(c_), d(d_) {}
  static FieldElement integer(i64 n) { return FieldElement(Rational(n)); }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_rational() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    return FieldElement(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
  }
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    return FieldElement(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
  }
  friend FieldElement operator-(const FieldElement& x) { return FieldElement(-x.a, -x.b, -x.c, -x.d); }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    // sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5, sqrt5*sqrt10 = 5 sqrt2
    Rational two(2), five(5), ten(10);
    return FieldElement(
        x.a * y.a + two * (x.b * y.b) + five * (x.c * y.c) + ten * (x.d * y.d),
        x.a * y.b + x.b * y.a + five * (x.c * y.d) + five * (x.d * y.c),
        x.a * y.c + x.c * y.a + two * (x.b * y.d) + two * (x.d * y.b),
        x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
  }
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  // Exact sign, via the tower Q(sqrt2)(sqrt5).  Writing the element as
  // s1 + s2*sqrt5 with s1 = a + b*sqrt2, s2 = c + d*sqrt2, the sign reduces
  // to signs in Q(sqrt2) and one comparison of s1^2 against 5*s2^2.
  int sign() const {
    auto sign_q2 = [](const Rational& x, const Rational& y) -> int {
      // sign of x + y*sqrt2
      int sx = x.sign(), sy = y.sign();
      if (sy == 0) return sx;
      if (sx == 0) return sy;
      if (sx == sy) return sx;
      // opposite signs: compare x^2 against 2 y^2
      Rational diff = x * x - Rational(2) * (y * y);
      int sd = diff.sign();
      if (sd == 0) return 0;  // cannot happen: sqrt2 irrational
      return sd == 1 ? sx : sy;
    };
    int s2s = sign_q2(c, d);
    if (s2s == 0) return sign_q2(a, b);
    int s1s = sign_q2(a, b);
    if (s1s == 0) return s2s;
    if (s1s == s2s) return s1s;
    // compare s1^2 with 5 s2^2 inside Q(sqrt2)
    Rational u = a * a + Rational(2) * (b * b) - Rational(5) * (c * c + Rational(2) * (d * d));
    Rational v = Rational(2) * (a * b) - Rational(10) * (c * d);  // coefficient of sqrt2
    int su = sign_q2(u, v);
    if (su == 0) return 0;  // s1^2 = 5 s2^2 with opposite signs: element is zero
    return su == 1 ? s1s : s2s;
  }

  std::string str() const {
    std::string s = a.str();
    if (!b.is_zero()) s += " + " + b.str() + "*r2";
    if (!c.is_zero()) s += " + " + c.str() + "*r5";
    if (!d.is_zero()) s += " + " + d.str() + "*r10";
    return s;
  }
};

inline FieldElement half() { return FieldElement(Rational(1, 2)); }
inline FieldElement sqrt2_over_2() { return FieldElement(Rational(0), Rational(1, 2)); }

// cos(2*pi*k/n) for the orders realized by finite quaternion subgroups.
// Throws no_match for orders whose cosines leave the field.
inline FieldElement cos_two_pi(i64 k, i64 n) {
  k %= n;
  if (k < 0) k += n;
  if (2 * k > n) k = n - k;  // cos is even
  switch (n) {
    case 1: return FieldElement(Rational(1));
    case 2: return k == 0 ? FieldElement(Rational(1)) : FieldElement(Rational(-1));
    case 3: return k == 0 ? FieldElement(Rational(1)) : FieldElement(Rational(-1, 2));
    case 4:
      if (k == 0) return FieldElement(Rational(1));
      if (k == 1) return FieldElement(Rational(0));
      return FieldElement(Rational(-1));
    case 5:
      if (k == 1) return FieldElement(Rational(-1, 4), Rational(0), Rational(1, 4));
      if (k == 2) return FieldElement(Rational(-1, 4), Rational(0), Rational(-1, 4));
      break;
    case 6:
      if (k == 1) return FieldElement(Rational(1, 2));
      break;
    case 8:
      if (k == 1) return sqrt2_over_2();
      if (k == 3) return -sqrt2_over_2();
      break;
    case 10:
      if (k == 1) return FieldElement(Rational(1, 4), Rational(0), Rational(1, 4));
      if (k == 3) return FieldElement(Rational(1, 4), Rational(0), Rational(-1, 4));
      break;
    default: break;
  }
  throw error(errc::no_match, "cos(2*pi*" + std::to_string(k) + "/" + std::to_string(n) + ") not in Q(sqrt2,sqrt5)");
}

}  // namespace esch
