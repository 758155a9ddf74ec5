#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "esch/numeric.hpp"

namespace esch {

// General Eschenburg parameters: SU(3) // S^1_{a,b} with sum(a) = sum(b).
struct EschParams {
  std::array<i64, 3> a{};
  std::array<i64, 3> b{};

  EschParams() = default;
  EschParams(std::array<i64, 3> a_, std::array<i64, 3> b_) : a(a_), b(b_) {
    if (a[0] + a[1] + a[2] != b[0] + b[1] + b[2])
      throw error(errc::parse_error, "Eschenburg parameters need sum(a) = sum(b)");
  }
  i64 c() const { return a[0] + a[1] + a[2]; }
};

// Cohomogeneity-two subfamily: a = (p1,p2,p3), b = (0,0,p1+p2+p3).
struct E2Params {
  std::array<i64, 3> p{};

  E2Params() = default;
  explicit E2Params(std::array<i64, 3> p_) : p(p_) {
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw error(errc::parse_error, "E2 triple must not be zero");
  }
  i64 sum() const { return p[0] + p[1] + p[2]; }
  EschParams as_esch() const { return EschParams(p, {0, 0, sum()}); }
};

// Bazaikin parameters: SU(5) // Sp(2)S^1_{p}, q = sum(p) cached.
struct BazParams {
  std::array<i64, 5> p{};
  i64 q = 0;

  BazParams() = default;
  explicit BazParams(std::array<i64, 5> p_) : p(p_), q(p_[0] + p_[1] + p_[2] + p_[3] + p_[4]) {}
};

struct TwistedFlag {};  // the 6-dimensional SU(3)//T^2 biquotient

using SpaceParams = std::variant<E2Params, EschParams, BazParams, TwistedFlag>;

bool esch_is_free(const EschParams& params);
bool esch_is_positively_curved(const EschParams& params);

// Canonical representative of an E2 triple under reordering and global sign
// flip: keep the sign with more positive entries (ties broken by the larger
// descending-sorted triple), then sort ascending.
E2Params e2_normalize(const E2Params& p);

bool e2_is_free(const E2Params& p);
bool e2_is_positively_curved(const E2Params& p);

bool baz_is_free(const BazParams& p);
bool baz_is_positively_curved(const BazParams& p);

enum class Family { AloffWallach, E1, E2Generic, EschGeneric, TwistedFlag, Bazaikin1, BazaikinGeneric };

struct FamilyTag {
  Family family;
  std::optional<i64> p;                        // E1 / Bazaikin1 parameter
  std::optional<std::pair<i64, i64>> aw;       // Aloff-Wallach (k,l), also set for E1(1)
  std::optional<i64> cohomogeneity;            // of the natural action; unset where the family gives none
};

// Classifies free, positively curved parameters into their families.
// Rejects non-free / non-positively-curved input with not_free /
// not_positively_curved.
FamilyTag classify_family(const SpaceParams& params);

// Reduce general Eschenburg parameters to an equivalent E2 triple when one
// side of the circle has a repeated weight (shift invariance plus the
// inverse-map equivalence E_{a,b} ~ E_{b,a}); nullopt for the genuinely
// cohomogeneity-four case.
std::optional<E2Params> esch_to_e2(const EschParams& params);

std::string family_name(Family f);

}  // namespace esch
