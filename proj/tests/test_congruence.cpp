#include <vector>

#include "doctest.h"
#include "esch/congruence.hpp"

using namespace esch;

namespace {

// Independent oracle: scan every root of unity of order dividing L.
std::vector<RationalAngle> brute_force(const std::vector<CongruenceEquation>& eqs, i64 L) {
  std::vector<RationalAngle> sols;
  for (i64 k = 0; k < L; ++k) {
    RationalAngle z(k, L);
    bool ok = true;
    for (const auto& eq : eqs)
      if (!(eq.exponent * z == eq.target)) {
        ok = false;
        break;
      }
    if (ok) sols.push_back(z);
  }
  return sols;
}

}  // namespace

TEST_CASE("congruence solver on worked examples") {
  auto zero = RationalAngle::zero();
  auto s1 = solve_congruence_system({{2, zero}, {3, zero}});
  REQUIRE(s1.kind == SolutionSet::Kind::Finite);
  CHECK(s1.solutions == std::vector<RationalAngle>{zero});

  auto s2 = solve_congruence_system({{3, zero}});
  CHECK(s2.solutions == std::vector<RationalAngle>{zero, RationalAngle(1, 3), RationalAngle(2, 3)});

  // z^2 = -1: the oracle fixes the expected set over denominators dividing 4
  std::vector<CongruenceEquation> sys = {{2, RationalAngle(1, 2)}};
  CHECK(brute_force(sys, 4) == std::vector<RationalAngle>{RationalAngle(1, 4), RationalAngle(3, 4)});
  auto s3 = solve_congruence_system(sys);
  CHECK(s3.solutions == brute_force(sys, 4));
}

TEST_CASE("degenerate systems") {
  CHECK(solve_congruence_system({}).is_all_circle());
  CHECK(solve_congruence_system({{0, RationalAngle(1, 3)}}).is_empty());
  CHECK(solve_congruence_system({{0, RationalAngle::zero()}}).is_all_circle());
  CHECK(solve_congruence_system({{4, RationalAngle(1, 3)}, {2, RationalAngle(1, 4)}}).is_empty());
  // negative exponents
  auto s = solve_congruence_system({{-2, RationalAngle(1, 2)}});
  CHECK(s.solutions == std::vector<RationalAngle>{RationalAngle(1, 4), RationalAngle(3, 4)});
}

TEST_CASE("solver equals brute force on 1000 random systems") {
  uint64_t seed = 99;
  auto next = [&]() {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return seed >> 33;
  };
  const std::vector<i64> dens = {1, 2, 3, 4, 6, 9, 12, 18, 36};
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<CongruenceEquation> eqs;
    size_t count = 1 + next() % 3;
    i64 L = 36;
    for (size_t e = 0; e < count; ++e) {
      i64 m = static_cast<i64>(next() % 25) - 12;  // |m| <= 12
      i64 d = dens[next() % dens.size()];
      i64 n = static_cast<i64>(next() % static_cast<uint64_t>(d));
      eqs.push_back({m, RationalAngle(n, d)});
      // every solution of m z = n/d has denominator dividing |m| d
      if (m != 0 && L == 36) L = std::abs(m) * d;
    }
    auto got = solve_congruence_system(eqs);
    auto expected = brute_force(eqs, L);
    if (got.is_all_circle()) {
      // every scanned candidate must satisfy the system
      CHECK(expected.size() == static_cast<size_t>(L));
      continue;
    }
    CHECK(got.solutions == expected);
    // direct substitution holds exactly for every returned solution
    for (const auto& z : got.solutions)
      for (const auto& eq : eqs) CHECK(eq.exponent * z == eq.target);
  }
}
