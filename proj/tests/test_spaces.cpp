#include "doctest.h"
#include "esch/spaces.hpp"

using namespace esch;

TEST_CASE("esch freeness on worked examples") {
  CHECK(esch_is_free(EschParams({1, 2, 3}, {0, 0, 6})));
  CHECK_FALSE(esch_is_free(EschParams({3, 3, 1}, {0, 0, 7})));
  CHECK(esch_is_free(EschParams({2, 1, -3}, {0, 0, 0})));  // A_{2,1}
}

TEST_CASE("esch curvature on worked examples") {
  CHECK(esch_is_positively_curved(EschParams({1, 1, 2}, {0, 0, 4})));
  CHECK_FALSE(esch_is_positively_curved(EschParams({1, 0, -1}, {0, 0, 0})));  // A_{1,0}
  CHECK(esch_is_positively_curved(EschParams({1, 1, 1}, {0, 0, 3})));
}

TEST_CASE("e2 normalization") {
  CHECK(e2_normalize(E2Params({2, 1, 1})).p == std::array<i64, 3>{1, 1, 2});
  CHECK(e2_normalize(E2Params({-1, -1, -2})).p == std::array<i64, 3>{1, 1, 2});
  CHECK(e2_normalize(E2Params({1, 1, -2})).p == std::array<i64, 3>{-2, 1, 1});
  // idempotent
  for (i64 a = -4; a <= 4; ++a)
    for (i64 b = -4; b <= 4; ++b)
      for (i64 c = -4; c <= 4; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        E2Params n = e2_normalize(E2Params({a, b, c}));
        CHECK(e2_normalize(n).p == n.p);
      }
}

TEST_CASE("e2 predicates on worked examples") {
  CHECK(e2_is_free(E2Params({1, 1, 2})));
  CHECK_FALSE(e2_is_free(E2Params({3, 3, 1})));
  CHECK(e2_is_free(E2Params({2, 1, 5})));

  CHECK(e2_is_positively_curved(E2Params({1, 2, 3})));
  CHECK(e2_is_positively_curved(E2Params({1, 1, -2})));  // A_{1,1}
  CHECK_FALSE(e2_is_positively_curved(E2Params({-2, 1, 3})));
}

TEST_CASE("bazaikin predicates on worked examples") {
  CHECK(baz_is_free(BazParams({1, 1, 1, 1, 1})));  // Berger space
  CHECK_FALSE(baz_is_free(BazParams({1, 1, 1, 1, 2})));
  CHECK_FALSE(baz_is_free(BazParams({1, 1, 1, 3, 3})));

  CHECK(baz_is_positively_curved(BazParams({1, 1, 1, 1, 3})));
  CHECK_FALSE(baz_is_positively_curved(BazParams({1, 1, 1, 1, -1})));
  CHECK(baz_is_positively_curved(BazParams({-1, 3, 3, 3, 3})));
}

TEST_CASE("cross-oracle: e2 predicates factor through the general ones") {
  for (i64 a = -20; a <= 20; ++a)
    for (i64 b = -20; b <= 20; ++b)
      for (i64 c = -20; c <= 20; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        E2Params p({a, b, c});
        EschParams e = p.as_esch();
        if (e2_is_free(p) != esch_is_free(e)) {
          FAIL("freeness mismatch at ", a, ",", b, ",", c);
        }
        if (e2_is_positively_curved(p) != esch_is_positively_curved(e)) {
          FAIL("curvature mismatch at ", a, ",", b, ",", c);
        }
      }
}

TEST_CASE("predicates are invariant under permutation and joint negation") {
  uint64_t s = 7;
  auto next = [&]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  };
  for (int trial = 0; trial < 300; ++trial) {
    i64 a = static_cast<i64>(next() % 31) - 15;
    i64 b = static_cast<i64>(next() % 31) - 15;
    i64 c = static_cast<i64>(next() % 31) - 15;
    if (a == 0 && b == 0 && c == 0) a = 1;
    E2Params p({a, b, c});
    bool f = e2_is_free(p), pc = e2_is_positively_curved(p);
    for (const std::array<i64, 3>& q :
         {std::array<i64, 3>{b, a, c}, {c, a, b}, {-a, -b, -c}, {-c, -b, -a}}) {
      E2Params r(q);
      CHECK(e2_is_free(r) == f);
      CHECK(e2_is_positively_curved(r) == pc);
      CHECK(e2_normalize(r).p == e2_normalize(p).p);
    }
    // 5-tuple permutation invariance
    i64 d = static_cast<i64>(next() % 15) - 7, e = static_cast<i64>(next() % 15) - 7;
    BazParams bz({a, b, c, d, e});
    BazParams bz2({e, c, a, d, b});
    CHECK(baz_is_free(bz) == baz_is_free(bz2));
    CHECK(baz_is_positively_curved(bz) == baz_is_positively_curved(bz2));
  }
}

TEST_CASE("family classification on worked examples") {
  auto t1 = classify_family(E2Params({1, 1, 5}));
  CHECK(t1.family == Family::E1);
  CHECK(*t1.p == 5);
  CHECK(*t1.cohomogeneity == 1);

  auto t2 = classify_family(E2Params({1, 1, -2}));
  CHECK(t2.family == Family::AloffWallach);
  CHECK(t2.aw == std::pair<i64, i64>{1, 1});
  CHECK(*t2.cohomogeneity == 0);

  auto t3 = classify_family(E2Params({1, 2, 3}));
  CHECK(t3.family == Family::E2Generic);
  CHECK(*t3.cohomogeneity == 2);

  // E_1 doubles as A_{1,1}
  auto t4 = classify_family(E2Params({1, 1, 1}));
  CHECK(t4.family == Family::E1);
  CHECK(t4.aw == std::pair<i64, i64>{1, 1});

  CHECK_THROWS_AS(classify_family(E2Params({3, 3, 1})), error);
  CHECK_THROWS_AS(classify_family(E2Params({-2, 1, 3})), error);

  auto b1 = classify_family(BazParams({1, 1, 1, 1, 3}));
  CHECK(b1.family == Family::Bazaikin1);
  CHECK(*b1.p == 2);

  auto tf = classify_family(SpaceParams{TwistedFlag{}});
  CHECK(tf.family == Family::TwistedFlag);
  CHECK(*tf.cohomogeneity == 2);
}

TEST_CASE("general Eschenburg parameters reduce to E2 where a weight repeats") {
  // E_p in its native coordinates
  auto r = esch_to_e2(EschParams({1, 1, 3}, {0, 0, 5}));
  REQUIRE(r.has_value());
  CHECK(r->p == std::array<i64, 3>{1, 1, 3});
  // shifted b-side
  auto s = esch_to_e2(EschParams({2, 3, 4}, {1, 1, 7}));
  REQUIRE(s.has_value());
  CHECK(s->p == std::array<i64, 3>{1, 2, 3});
  // repeats on both sides: the b-side shift wins, landing on the
  // inverse-map presentation of the same space
  auto t = esch_to_e2(EschParams({0, 0, 5}, {1, 1, 3}));
  REQUIRE(t.has_value());
  CHECK(t->p == std::array<i64, 3>{-1, -1, 4});
  // repeated weight on the a-side only goes through the inverse map
  auto u = esch_to_e2(EschParams({2, 2, 3}, {0, 3, 4}));
  REQUIRE(u.has_value());
  CHECK(u->p == std::array<i64, 3>{-2, 1, 2});
}

TEST_CASE("a genuinely cohomogeneity-four example") {
  // distinct weights on both sides, free and positively curved
  bool found = false;
  for (i64 a1 = -4; a1 <= 4 && !found; ++a1)
    for (i64 a2 = a1 + 1; a2 <= 4 && !found; ++a2)
      for (i64 a3 = a2 + 1; a3 <= 4 && !found; ++a3)
        for (i64 b1 = -4; b1 <= 4 && !found; ++b1)
          for (i64 b2 = b1 + 1; b2 <= 4 && !found; ++b2) {
            i64 b3 = a1 + a2 + a3 - b1 - b2;
            if (b3 <= b2) continue;
            EschParams e({a1, a2, a3}, {b1, b2, b3});
            if (!esch_is_free(e) || !esch_is_positively_curved(e)) continue;
            auto tag = classify_family(e);
            CHECK(tag.family == Family::EschGeneric);
            CHECK(*tag.cohomogeneity == 4);
            found = true;
          }
  CHECK(found);
}
