#include "doctest.h"
#include "esch/groups.hpp"
#include "esch/quaternion.hpp"

using namespace esch;

TEST_CASE("rational and angle basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));

  RationalAngle a(5, 3);  // reduced mod 1
  CHECK(a == RationalAngle(2, 3));
  CHECK((a + RationalAngle(1, 3)).is_zero());
  CHECK((-RationalAngle(1, 4)) == RationalAngle(3, 4));
  CHECK((3 * RationalAngle(1, 6)) == RationalAngle(1, 2));
  CHECK(RationalAngle(5, 6).folded() == RationalAngle(1, 6));
  CHECK(RationalAngle(1, 7).order() == 7);
}

TEST_CASE("overflow aborts with a diagnostic instead of wrapping") {
  i64 big = 4000000000000000000LL;
  CHECK_THROWS_AS(mul_i64(big, 4), error);
  CHECK_THROWS_AS((void)(RationalAngle(1, big) + RationalAngle(1, big - 1)), error);
}

TEST_CASE("field sign is exact") {
  FieldElement phi_part(Rational(1, 4), Rational(0), Rational(1, 4));    // (1+sqrt5)/4
  FieldElement neg_part(Rational(1, 4), Rational(0), Rational(-1, 4));   // (1-sqrt5)/4
  CHECK(phi_part.sign() == 1);
  CHECK(neg_part.sign() == -1);
  CHECK((sqrt2_over_2() - FieldElement(Rational(1, 2))).sign() == 1);
  CHECK((sqrt2_over_2() * sqrt2_over_2()) == FieldElement(Rational(1, 2)));
  // sqrt2*sqrt5 = sqrt10 exactly
  FieldElement r2(Rational(0), Rational(1));
  FieldElement r5(Rational(0), Rational(0), Rational(1));
  FieldElement r10(Rational(0), Rational(0), Rational(0), Rational(1));
  CHECK(r2 * r5 == r10);
  CHECK((r10 * r10) == FieldElement(Rational(10)));
  CHECK((r2 + r5 - r10).sign() == 1);  // 1.414 + 2.236 - 3.162 > 0
  CHECK((r10 - r2 - r5).sign() == -1);
}

TEST_CASE("quat_order on worked examples") {
  CHECK(quat_order(UnitQuaternion::one()) == 1);
  CHECK(quat_order(UnitQuaternion::i()) == 4);
  UnitQuaternion w(half(), half(), half(), half());
  CHECK(quat_order(w) == 6);
  // q^3 = -1 along the way
  CHECK((w * w * w) == UnitQuaternion::minus_one());
  // a unit quaternion of infinite order overflows the cap
  UnitQuaternion bad(FieldElement(Rational(3, 5)), FieldElement(Rational(4, 5)), {}, {});
  CHECK(bad.is_unit());
  CHECK_THROWS_AS(quat_order(bad), error);
}

TEST_CASE("eigen_angle_of on worked examples") {
  CHECK(eigen_angle_of(UnitQuaternion::one()) == RationalAngle(0, 1));
  CHECK(eigen_angle_of(UnitQuaternion::i()) == RationalAngle(1, 4));
  CHECK(eigen_angle_of(UnitQuaternion(half(), half(), half(), half())) == RationalAngle(1, 6));
}

TEST_CASE("eigen angle properties over the quaternion catalogs") {
  for (const char* name : {"2T", "2O", "2I"}) {
    auto g = build_group_by_name(name);
    for (const auto& e : g.elements) {
      const auto& q = e.quat;
      RationalAngle t = eigen_angle_of(q);
      CHECK(t == eigen_angle_of(q.conj()));
      RationalAngle tneg = eigen_angle_of(-q);
      CHECK(tneg == (RationalAngle(1, 2) - t).folded());
      // eigenvalues of an order-n element are primitive n-th roots
      CHECK(t.den == quat_order(q));
    }
  }
}

TEST_CASE("quat_order is conjugation invariant") {
  // exhaustive over the binary tetrahedral group, sampled over 2O
  auto t = build_group_by_name("2T");
  for (const auto& a : t.elements)
    for (const auto& b : t.elements)
      CHECK(quat_order(a.quat * b.quat * a.quat.conj()) == quat_order(b.quat));

  auto g = build_group_by_name("2O");
  uint64_t s = 12345;
  auto rnd = [&]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return (s >> 33) % g.elements.size();
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto& q = g.elements[rnd()].quat;
    const auto& r = g.elements[rnd()].quat;
    CHECK(quat_order(q * r * q.conj()) == quat_order(r));
  }
}
