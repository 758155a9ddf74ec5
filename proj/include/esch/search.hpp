#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "esch/fixed_point.hpp"
#include "esch/serialize.hpp"

namespace esch {

struct ShardSpec {
  i64 index = 0;
  i64 count = 1;
};

struct SweepConfig {
  i64 max_abs = 40;
  std::optional<Family> family_filter;
  ShardSpec shard;
};

// All free, positively curved, canonical E2 triples with max|p_i| <= bound,
// in lexicographic order.  Sharding partitions deterministically by a hash
// of the triple.
std::vector<E2Params> enumerate_canonical(const SweepConfig& config);

// The order-theoretic freeness criterion for E_p (pure SU(2)xSU(2) tuples):
// every element outside the principal isotropy H must have distinct
// component orders, differ from +-(-id, id), and fail one of the two
// divisibility conditions |g1| | p|g2|, |g2| | (p+1)|g1|.
bool order_criterion_free(i64 p, const FiniteIsometryGroup& group);

// The lexicographically smallest `count` triples of distinct primes
// congruent to 1 mod modulus (deterministic Miller-Rabin primality).
std::vector<std::array<i64, 3>> dirichlet_triples(i64 modulus, i64 count);

// Z_2 x Z_{2q} candidate on E_p: the quaternion group on the SO(3)-effective
// side together with Z_q embedded as diag(1, zeta_q, conj zeta_q) in the
// torus of the chosen side.
enum class PhasePlacement { Left, Right };
FiniteIsometryGroup theorem_b_group(i64 p, i64 q, PhasePlacement placement);

EschParams e1_space(i64 p);

// Canonical triples name spaces only up to the inverse-map equivalence
// E_{a,b} ~ E_{b,a}: the triples (1,1,p) and (-p-1,1,1) present the same
// space.  Returns the preferred representative of the isometry class.
std::array<i64, 3> space_class_representative(const E2Params& p);

// Abstract type of the effective quotient: the group modulo its intersection
// with the action kernel.
AbstractDescriptor effective_abstract_type(const EschParams& space, const FiniteIsometryGroup& group);

struct ComparisonRow {
  i64 p = 0;
  std::string group;
  bool product = true;
  bool order_verdict = false;
  bool solver_verdict = false;
  bool agree = false;
};

// Order criterion vs. solver over catalog product groups (and a few
// non-product graph subgroups, reported but never asserted).
std::vector<ComparisonRow> order_criterion_comparison(i64 p_max);

struct VerifyOptions {
  i64 max_abs = 40;
  i64 p_max = 25;
  i64 q_max = 25;
  int jobs = 1;
};

struct VerifyReport {
  std::string suite;
  std::vector<json> records;
  json summary;
  bool pass = false;
};

// suite in {so3-classification, theorem-b, dirichlet-f,
// order-criterion-comparison, invariant-formulas}
VerifyReport verify_theorems(const std::string& suite, const VerifyOptions& opt);

}  // namespace esch
