#pragma once

#include "esch/angle.hpp"
#include "esch/field.hpp"

namespace esch {

// Unit quaternion over Q(sqrt2,sqrt5), identified with an element of SU(2)
// via w + x i + y j + z k  <->  [[w+xi, y+zi], [-y+zi, w-xi]].
struct UnitQuaternion {
  FieldElement w, x, y, z;

  UnitQuaternion() : w(Rational(1)) {}
  UnitQuaternion(FieldElement w_, FieldElement x_, FieldElement y_, FieldElement z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static UnitQuaternion one() { return UnitQuaternion(); }
  static UnitQuaternion minus_one() { return UnitQuaternion(FieldElement(Rational(-1)), {}, {}, {}); }
  static UnitQuaternion i() { return UnitQuaternion({}, FieldElement(Rational(1)), {}, {}); }
  static UnitQuaternion j() { return UnitQuaternion({}, {}, FieldElement(Rational(1)), {}); }
  static UnitQuaternion k() { return UnitQuaternion({}, {}, {}, FieldElement(Rational(1))); }

  FieldElement norm_sq() const { return w * w + x * x + y * y + z * z; }
  bool is_unit() const { return norm_sq() == FieldElement(Rational(1)); }
  bool is_one() const { return w == FieldElement(Rational(1)) && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_minus_one() const { return w == FieldElement(Rational(-1)) && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_diagonal() const { return y.is_zero() && z.is_zero(); }

  UnitQuaternion conj() const { return UnitQuaternion(w, -x, -y, -z); }

  friend UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) {
    return UnitQuaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
  }
  friend UnitQuaternion operator-(const UnitQuaternion& q) { return UnitQuaternion(-q.w, -q.x, -q.y, -q.z); }
  friend bool operator==(const UnitQuaternion& p, const UnitQuaternion& q) {
    return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
  }
};

// Smallest n >= 1 with q^n = 1, by exact repeated multiplication.
inline i64 quat_order(const UnitQuaternion& q, i64 cap = 240) {
  UnitQuaternion acc = q;
  for (i64 n = 1; n <= cap; ++n) {
    if (acc.is_one()) return n;
    acc = acc * q;
  }
  throw error(errc::overflow, "quaternion order exceeds cap");
}

// The angle t in [0, 1/2] with eigenvalues {e^{2 pi i t}, e^{-2 pi i t}},
// found by matching Re(q) against cos(2*pi*k/n) over k coprime to the order n.
inline RationalAngle eigen_angle_of(const UnitQuaternion& q, i64 cap = 240) {
  i64 n = quat_order(q, cap);
  for (i64 k = 0; 2 * k <= n; ++k) {
    if (n > 1 && gcd_i64(k, n) != 1) continue;
    if (n == 1 && k != 0) break;
    FieldElement c;
    try {
      c = cos_two_pi(k, n);
    } catch (const error&) {
      continue;
    }
    if (q.w == c) return RationalAngle(k, n);
  }
  throw error(errc::no_match, "quaternion real part matches no admissible cosine");
}

}  // namespace esch
