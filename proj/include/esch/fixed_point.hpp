#pragma once

#include <array>
#include <optional>

#include "esch/congruence.hpp"
#include "esch/groups.hpp"
#include "esch/spaces.hpp"

namespace esch {

// Symbolic eigenvalue z^m * e^{2 pi i beta} of a circle-translated isometry.
struct EigMonomial {
  i64 z_exp = 0;
  RationalAngle const_angle;

  friend bool operator==(const EigMonomial& a, const EigMonomial& b) {
    return a.z_exp == b.z_exp && a.const_angle == b.const_angle;
  }
};

using EigTriple = std::array<EigMonomial, 3>;

// Eigenvalue triples of the two sides of a tuple acting on SU(3)//S^1_{a,b}:
// an element with a non-diagonal SU(2) part needs the corresponding weight
// pair repeated (upper 2x2 block convention); otherwise unsupported_factor.
std::pair<EigTriple, EigTriple> eig_triples(const EschParams& space, const IsometryTuple& t);

struct FixedPointWitness {
  RationalAngle z;
  int bijection = 0;  // index into the lexicographic list of S_3
  IsometryTuple element;
  std::optional<RationalAngle> free_eigen;  // lambda, for factor-level verdicts
};

// Searches all 6 bijections between the triples; each yields a congruence
// system for z.  Returns the first solution under (bijection index, angle
// order), or nullopt.
std::optional<std::pair<RationalAngle, int>> fixed_point_witness(const EigTriple& left, const EigTriple& right);

// All circle parameters solving some bijection, per bijection index.
std::array<SolutionSet, 6> fixed_point_solutions(const EigTriple& left, const EigTriple& right);

// True iff the tuple acts trivially: its two matrices are zeta * diag(z^a)
// and zeta * diag(z^b) for a common circle pair (z, zeta).
bool is_in_action_kernel(const EschParams& space, const IsometryTuple& t);

enum class Verdict { Free, NotFree };

struct FreenessCertificate {
  Verdict verdict = Verdict::Free;
  std::optional<FixedPointWitness> witness;
};

// Master freeness check: iterates the non-kernel elements in canonical order
// and reports the first fixed-point witness, if any.  Requires a free,
// positively curved space.
FreenessCertificate action_is_free(const EschParams& space, const FiniteIsometryGroup& group);

// Whether the requested side carries an SU(2) factor in the natural isometry
// group (repeated weight in the upper 2x2 block).
bool side_has_su2_factor(const EschParams& space, Side side);

// Freeness of the full SU(2)/SO(3) factor on one side: the factor element's
// eigenvalue angle lambda is treated as a second unknown, eliminated between
// its two occurrences, and reconstructed from each circle solution.  Free iff
// every reconstructed element lies in the action kernel.
FreenessCertificate so3_factor_is_free(const EschParams& space, Side side);

}  // namespace esch
