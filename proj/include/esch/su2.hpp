#pragma once

#include <optional>
#include <vector>

#include "esch/quaternion.hpp"

namespace esch {

// Exact representative of a finite-order element of SU(2).
//
//   Torus(a)  = diag(e^{2 pi i a}, e^{-2 pi i a})
//   JCoset(a) = Torus(a) * j            (the non-torus coset of Pin-type elements)
//   Quat(q)   = unit quaternion over Q(sqrt2, sqrt5)
//
// Torus/JCoset cover cyclic and binary dihedral groups of arbitrary order
// without number-field constraints; Quat covers the binary polyhedral groups.
// Products mix the two families only through the central elements +-id.
struct Su2Element {
  enum class Rep { Torus, JCoset, Quat };

  Rep rep = Rep::Torus;
  RationalAngle angle;   // Torus/JCoset payload
  UnitQuaternion quat;   // Quat payload

  static Su2Element identity() { return torus(RationalAngle::zero()); }
  static Su2Element torus(RationalAngle a) {
    Su2Element e;
    e.rep = Rep::Torus;
    e.angle = a;
    return e;
  }
  static Su2Element jcoset(RationalAngle a) {
    Su2Element e;
    e.rep = Rep::JCoset;
    e.angle = a;
    return e;
  }
  static Su2Element from_quat(UnitQuaternion q) {
    Su2Element e;
    e.rep = Rep::Quat;
    e.quat = q;
    return e;
  }

  bool is_identity() const {
    if (rep == Rep::Torus) return angle.is_zero();
    if (rep == Rep::Quat) return quat.is_one();
    return false;
  }
  bool is_minus_identity() const {
    if (rep == Rep::Torus) return angle == RationalAngle::half();
    if (rep == Rep::Quat) return quat.is_minus_one();
    return false;
  }
  bool is_central() const { return is_identity() || is_minus_identity(); }

  Su2Element negated() const {
    switch (rep) {
      case Rep::Torus: return torus(angle + RationalAngle::half());
      case Rep::JCoset: return jcoset(angle + RationalAngle::half());
      default: return from_quat(-quat);
    }
  }

  Su2Element inverse() const {
    switch (rep) {
      case Rep::Torus: return torus(-angle);
      case Rep::JCoset: return jcoset(angle + RationalAngle::half());
      default: return from_quat(quat.conj());
    }
  }

  i64 order(i64 cap = 240) const {
    switch (rep) {
      case Rep::Torus: return angle.order();
      case Rep::JCoset: return 4;
      default: return quat_order(quat, cap);
    }
  }

  // eigenvalue angle in [0, 1/2]
  RationalAngle eigen_angle() const {
    switch (rep) {
      case Rep::Torus: return angle.folded();
      case Rep::JCoset: return RationalAngle(1, 4);  // trace 0
      default: return eigen_angle_of(quat);
    }
  }

  // Signed torus angle if the underlying matrix is diagonal: the element is
  // diag(e^{2 pi i t}, e^{-2 pi i t}) and t is returned with its sign.
  std::optional<RationalAngle> diagonal_angle() const {
    if (rep == Rep::Torus) return angle;
    if (rep == Rep::JCoset) return std::nullopt;
    if (!quat.is_diagonal()) return std::nullopt;
    RationalAngle t = eigen_angle_of(quat);
    int sx = quat.x.sign();
    if (sx < 0) return -t;
    return t;
  }

  friend Su2Element operator*(const Su2Element& a, const Su2Element& b) {
    // central elements bridge the two representation families
    if (a.is_central()) return a.is_identity() ? b : b.negated();
    if (b.is_central()) return b.is_identity() ? a : a.negated();
    if (a.rep == Rep::Quat || b.rep == Rep::Quat) {
      if (a.rep != Rep::Quat || b.rep != Rep::Quat)
        throw error(errc::unsupported_operation, "mixed torus/quaternion product");
      return from_quat(a.quat * b.quat);
    }
    bool aj = a.rep == Rep::JCoset, bj = b.rep == Rep::JCoset;
    if (!aj && !bj) return torus(a.angle + b.angle);
    if (!aj && bj) return jcoset(a.angle + b.angle);
    if (aj && !bj) return jcoset(a.angle - b.angle);
    // (T(a) j)(T(b) j) = T(a-b) j^2 = T(a-b+1/2)
    return torus(a.angle - b.angle + RationalAngle::half());
  }

  // Canonical encoding for deduplication and deterministic ordering.
  // Central elements get a representation-independent encoding.
  std::vector<i64> key() const {
    if (is_identity()) return {0};
    if (is_minus_identity()) return {1};
    std::vector<i64> k;
    if (rep == Rep::Torus) {
      k = {2, angle.num, angle.den};
    } else if (rep == Rep::JCoset) {
      k = {3, angle.num, angle.den};
    } else {
      k = {4};
      for (const FieldElement* f : {&quat.w, &quat.x, &quat.y, &quat.z}) {
        for (const Rational* r : {&f->a, &f->b, &f->c, &f->d}) {
          k.push_back(r->num);
          k.push_back(r->den);
        }
      }
    }
    return k;
  }

  friend bool operator==(const Su2Element& a, const Su2Element& b) { return a.key() == b.key(); }
};

}  // namespace esch
