#include "esch/invariants.hpp"

#include <algorithm>
#include <cstdlib>

namespace esch {

i64 h4_order(const E2Params& p) {
  i64 r = add_i64(add_i64(mul_i64(p.p[0], p.p[1]), mul_i64(p.p[0], p.p[2])), mul_i64(p.p[1], p.p[2]));
  return r < 0 ? -r : r;
}

i64 pontrjagin_residue(const E2Params& p) {
  i64 r = h4_order(p);
  if (r == 0) throw error(errc::zero_modulus, "H^4 is infinite (r = 0); no residue");
  i64 s = p.sum();
  i64 v = mul_i64(2, mul_i64(s, s)) % r;
  return v < 0 ? v + r : v;
}

std::array<i64, 3> vertex_lens_orders(const E2Params& p) {
  std::array<i64, 3> v = {std::abs(p.p[0] + p.p[1]), std::abs(p.p[0] + p.p[2]), std::abs(p.p[1] + p.p[2])};
  std::sort(v.begin(), v.end());
  return v;
}

E2Invariants e2_invariants(const E2Params& p) {
  return {h4_order(p), pontrjagin_residue(p), vertex_lens_orders(p)};
}

Distinguisher distinguish_pair(const E2Params& p, const E2Params& q) {
  if (h4_order(p) != h4_order(q)) return Distinguisher::ByH4Order;
  if (pontrjagin_residue(p) != pontrjagin_residue(q)) return Distinguisher::ByPontrjagin;
  return Distinguisher::Indistinguishable;
}

}  // namespace esch
