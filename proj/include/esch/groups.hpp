#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esch/su2.hpp"

namespace esch {

enum class Su2GroupKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

struct FiniteSu2Group {
  Su2GroupKind kind;
  i64 n = 0;  // parameter for Cyclic / BinaryDihedral
  std::vector<Su2Element> elements;  // sorted by canonical key
};

// Catalog construction: cyclic and binary dihedral groups in torus/j-coset
// form, binary polyhedral groups by closure from standard quaternion
// generators.
FiniteSu2Group build_group(Su2GroupKind kind, i64 n = 0);

// Names accepted on the CLI: "cyclic:n", "bindihedral:n", "quaternion8",
// "2T", "2O", "2I".
FiniteSu2Group build_group_by_name(const std::string& name);

// Element of the natural isometry group of an Eschenburg-type biquotient:
// central circle phases w1, w2 and SU(2) parts g1, g2 on the two sides.
struct IsometryTuple {
  RationalAngle w1;
  Su2Element g1 = Su2Element::identity();
  RationalAngle w2;
  Su2Element g2 = Su2Element::identity();

  static IsometryTuple identity() { return {}; }

  IsometryTuple inverse() const { return {-w1, g1.inverse(), -w2, g2.inverse()}; }

  friend IsometryTuple operator*(const IsometryTuple& a, const IsometryTuple& b) {
    return {a.w1 + b.w1, a.g1 * b.g1, a.w2 + b.w2, a.g2 * b.g2};
  }

  i64 order(i64 cap = 240) const {
    i64 o = lcm_i64(w1.order(), g1.order(cap));
    o = lcm_i64(o, w2.order());
    return lcm_i64(o, g2.order(cap));
  }

  std::vector<i64> key() const;
  friend bool operator==(const IsometryTuple& a, const IsometryTuple& b) { return a.key() == b.key(); }
};

struct FiniteIsometryGroup {
  std::vector<IsometryTuple> elements;  // sorted by canonical key
  std::vector<IsometryTuple> generators;

  i64 order() const { return static_cast<i64>(elements.size()); }
};

// Breadth-first closure under multiplication; deterministic element ordering
// (lexicographic on canonical encodings).  Throws cap_exceeded beyond cap.
FiniteIsometryGroup close_subgroup(const std::vector<IsometryTuple>& generators, i64 cap = 10000);

// Convenience embeddings of an SU(2) catalog group as one-sided tuples.
enum class Side { Left, Right };
FiniteIsometryGroup embed_su2_group(const FiniteSu2Group& g, Side side, i64 cap = 10000);

struct AbstractDescriptor {
  i64 order = 1;
  std::map<i64, i64> order_histogram;  // element order -> count
  bool abelian = false;
  std::optional<std::vector<i64>> invariant_factors;  // ascending, present iff abelian
};

// Order, element-order histogram, and (for abelian groups) the invariant
// factor decomposition recovered from the order-counting function.
AbstractDescriptor abstract_type(const FiniteIsometryGroup& g);

// Shared helper: invariant factors of an abelian group from the counts
// N(m) = #{x : x^m = e}; each prime's partition comes from N(p^k).
std::vector<i64> invariant_factors_from_counts(i64 order, const std::map<i64, i64>& order_histogram);

}  // namespace esch
