#pragma once

#include <array>

#include "esch/spaces.hpp"

namespace esch {

// Topological invariants of the cohomogeneity-two Eschenburg spaces E_p.
struct E2Invariants {
  i64 r = 0;                           // order of H^4
  i64 p1_residue = 0;                  // first Pontrjagin class mod r, in [0, r)
  std::array<i64, 3> vertex_orders{};  // |p_i + p_j|, sorted
};

// |p1 p2 + p1 p3 + p2 p3|
i64 h4_order(const E2Params& p);

// 2 (p1+p2+p3)^2 reduced mod r into [0, r); zero_modulus when r = 0.
i64 pontrjagin_residue(const E2Params& p);

// fundamental group orders of the three vertex lens spaces, sorted
std::array<i64, 3> vertex_lens_orders(const E2Params& p);

E2Invariants e2_invariants(const E2Params& p);

enum class Distinguisher { ByH4Order, ByPontrjagin, Indistinguishable };

// First invariant in the fixed order (r, then p1 residue) separating the two
// spaces.
Distinguisher distinguish_pair(const E2Params& p, const E2Params& q);

}  // namespace esch
