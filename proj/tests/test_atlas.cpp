#include "doctest.h"
#include "esch/atlas.hpp"

using namespace esch;

TEST_CASE("isometry dimensions across the families") {
  CHECK(isometry_descriptor(E2Params({1, 1, -2})).dimension == 11);
  CHECK(isometry_descriptor(E2Params({2, 1, -3})).dimension == 9);
  CHECK(isometry_descriptor(E2Params({1, 1, 5})).dimension == 7);
  CHECK(isometry_descriptor(E2Params({1, 3, 5})).dimension == 5);
  CHECK(isometry_descriptor(E2Params({1, 1, 1})).dimension == 11);  // E_1 = A_{1,1}
}

TEST_CASE("descriptor contents follow the classification") {
  auto e1 = isometry_descriptor(E2Params({1, 1, 5}));
  CHECK(e1.full_group == std::string("(U(2)\xe2\x8b\x8aZ2)\xc3\x97SO(3)"));
  CHECK(e1.component_count == 2);
  CHECK(e1.rank == 3);

  auto e2_odd = isometry_descriptor(E2Params({1, 3, 5}));
  CHECK(e2_odd.identity_component == std::string("T2\xc3\x97SO(3)"));
  CHECK(e2_odd.full_group_open);
  auto e2_even = isometry_descriptor(E2Params({1, 2, 3}));
  CHECK(e2_even.identity_component == std::string("T2\xc3\x97SU(2)"));

  auto tf = isometry_descriptor(SpaceParams{TwistedFlag{}});
  CHECK(tf.identity_component == "U(2)");
  CHECK(tf.dimension == 4);
  CHECK(tf.rank == 2);

  auto b1 = isometry_descriptor(BazParams({1, 1, 1, 1, 3}));
  CHECK(b1.full_group == std::string("U(4)\xe2\x8b\x8aZ2"));
  CHECK(b1.dimension == 16);
  CHECK(b1.rank == 4);
  auto berger = isometry_descriptor(BazParams({1, 1, 1, 1, 1}));
  CHECK(berger.full_group_open);
}

TEST_CASE("descriptor dimensions agree with the symbolic names") {
  CHECK(symbolic_dimension("U(2)\xc3\x97SO(3)") == 7);
  CHECK(symbolic_dimension("T2\xc3\x97SU(2)") == 5);
  CHECK(symbolic_dimension("T2\xc3\x97SO(3)") == 5);
  CHECK(symbolic_dimension("(SU(3)\xc3\x97U(2))/S1") == 11);
  CHECK(symbolic_dimension("(SU(3)\xc3\x97T2)/S1") == 9);
  CHECK(symbolic_dimension("U(4)\xe2\x8b\x8aZ2") == 16);
  for (const SpaceParams& sp :
       {SpaceParams{E2Params({1, 3, 5})}, SpaceParams{E2Params({1, 2, 3})}, SpaceParams{E2Params({1, 1, 5})},
        SpaceParams{E2Params({2, 1, -3})}, SpaceParams{E2Params({1, 1, -2})}}) {
    auto d = isometry_descriptor(sp);
    CHECK(symbolic_dimension(d.identity_component) == d.dimension);
  }
}

TEST_CASE("group diagrams carry the slope (p+1, p)") {
  auto d2 = group_diagram(E2Params({1, 1, 2}));
  CHECK(d2.slope == std::pair<i64, i64>{3, 2});
  CHECK(d2.principal_isotropy.find("(-id, id)") != std::string::npos);
  auto d3 = group_diagram(E2Params({1, 1, 3}));
  CHECK(d3.slope == std::pair<i64, i64>{4, 3});
  CHECK(d3.principal_isotropy.find("(id, -id)") != std::string::npos);

  auto b2 = group_diagram(BazParams({1, 1, 1, 1, 3}));
  CHECK(b2.slope == std::pair<i64, i64>{3, 2});
  CHECK(b2.k_minus.find("Sp(2)") != std::string::npos);

  for (i64 p = 1; p <= 10; ++p) {
    auto de = group_diagram(E2Params({1, 1, p}));
    CHECK(gcd_i64(de.slope.first, de.slope.second) == 1);
    auto db = group_diagram(BazParams({1, 1, 1, 1, 2 * p - 1}));
    CHECK(db.slope == std::pair<i64, i64>{p + 1, p});
  }

  CHECK_THROWS_AS(group_diagram(E2Params({1, 2, 3})), error);
}
