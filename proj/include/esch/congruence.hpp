#pragma once

#include <utility>
#include <vector>

#include "esch/angle.hpp"

namespace esch {

// One equation z^m = target over the circle group, in additive notation
// m * z = target with z, target in Q/Z.
struct CongruenceEquation {
  i64 exponent;
  RationalAngle target;
};

// Solution set of a congruence system: empty, a finite list of roots of
// unity, or the whole circle.
struct SolutionSet {
  enum class Kind { Empty, Finite, AllCircle } kind = Kind::AllCircle;
  std::vector<RationalAngle> solutions;  // sorted ascending, populated iff Finite

  static SolutionSet empty() { return {Kind::Empty, {}}; }
  static SolutionSet all_circle() { return {Kind::AllCircle, {}}; }
  static SolutionSet finite(std::vector<RationalAngle> sols) { return {Kind::Finite, std::move(sols)}; }

  bool is_empty() const { return kind == Kind::Empty; }
  bool is_all_circle() const { return kind == Kind::AllCircle; }
  // deterministic representative: smallest solution (angle 0 for the circle)
  RationalAngle first() const {
    if (kind == Kind::AllCircle) return RationalAngle::zero();
    return solutions.front();
  }
};

// Solves a list of equations z^m = target exactly by extended-Euclid
// reduction to a single equation z^g = c plus consistency checks.
// Equations with m = 0 act as pure consistency constraints.
inline SolutionSet solve_congruence_system(const std::vector<CongruenceEquation>& equations) {
  i64 g = 0;
  RationalAngle c = RationalAngle::zero();
  for (const auto& eq : equations) {
    i64 m = eq.exponent;
    RationalAngle tau = eq.target;
    if (m < 0) {
      m = -m;
      tau = -tau;
    }
    if (m == 0) {
      if (!tau.is_zero()) return SolutionSet::empty();
      continue;
    }
    if (g == 0) {
      g = m;
      c = tau;
      continue;
    }
    auto [d, s, t] = egcd(g, m);
    RationalAngle cc = s * c + t * tau;
    if (!((g / d) * cc == c) || !((m / d) * cc == tau)) return SolutionSet::empty();
    g = d;
    c = cc;
  }
  if (g == 0) return SolutionSet::all_circle();
  // solutions of g*z = c: z = (c + k)/g for k = 0..g-1, already ascending
  std::vector<RationalAngle> sols;
  sols.reserve(static_cast<size_t>(g));
  for (i64 k = 0; k < g; ++k) {
    sols.push_back(RationalAngle(add_i64(c.num, mul_i64(k, c.den)), mul_i64(c.den, g)));
  }
  return SolutionSet::finite(std::move(sols));
}

}  // namespace esch
