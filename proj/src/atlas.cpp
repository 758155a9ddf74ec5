#include "esch/atlas.hpp"

#include <vector>

namespace esch {

namespace {

constexpr const char* kTimes = "\xc3\x97";      // multiplication sign
constexpr const char* kSemidirect = "\xe2\x8b\x8a";  // rtimes

IsometryDescriptor e2_descriptor(const FamilyTag& tag, const E2Params& normalized) {
  IsometryDescriptor d;
  d.cohomogeneity = tag.cohomogeneity;
  switch (tag.family) {
    case Family::AloffWallach: {
      bool a11 = tag.aw && tag.aw->first == 1 && tag.aw->second == 1;
      if (a11) {
        d.identity_component = std::string("(SU(3)") + kTimes + "U(2))/S1";
        d.dimension = 11;
      } else {
        d.identity_component = std::string("(SU(3)") + kTimes + "T2)/S1";
        d.dimension = 9;
      }
      d.rank = 3;
      d.full_group_open = true;
      d.note = "homogeneous case; full group not restated here";
      return d;
    }
    case Family::E1: {
      if (tag.p && *tag.p == 1) {
        // E_1 is the Aloff-Wallach space A_{1,1}
        d.identity_component = std::string("(SU(3)") + kTimes + "U(2))/S1";
        d.dimension = 11;
        d.rank = 3;
        d.full_group_open = true;
        d.note = "E_1 = A_{1,1}";
        return d;
      }
      d.identity_component = std::string("U(2)") + kTimes + "SO(3)";
      d.dimension = 7;
      d.rank = 3;
      d.full_group = std::string("(U(2)") + kSemidirect + "Z2)" + kTimes + "SO(3)";
      d.component_count = 2;
      d.note = "second component induced by complex conjugation";
      return d;
    }
    default: {
      bool all_odd = true;
      for (i64 x : normalized.p)
        if (x % 2 == 0) all_odd = false;
      d.identity_component = std::string("T2") + kTimes + (all_odd ? "SO(3)" : "SU(2)");
      d.dimension = 5;
      d.rank = 3;
      d.full_group_open = true;
      d.note = "extra component from complex conjugation suspected; maximality open";
      return d;
    }
  }
}

}  // namespace

IsometryDescriptor isometry_descriptor(const SpaceParams& params) {
  FamilyTag tag = classify_family(params);
  IsometryDescriptor d;
  switch (tag.family) {
    case Family::TwistedFlag:
      d.identity_component = "U(2)";
      d.dimension = 4;
      d.rank = 2;
      d.cohomogeneity = 2;
      d.full_group_open = true;
      return d;
    case Family::Bazaikin1: {
      d.identity_component = "U(4)";
      d.dimension = 16;
      d.rank = 4;
      d.cohomogeneity = 1;
      if (tag.p && *tag.p > 1) {
        d.full_group = std::string("U(4)") + kSemidirect + "Z2";
        d.component_count = 2;
        d.note = "second component induced by complex conjugation";
      } else {
        d.full_group_open = true;
        d.note = "B_1 is the homogeneous Berger space";
      }
      return d;
    }
    case Family::BazaikinGeneric:
      throw error(errc::no_match, "no isometry classification recorded for generic Bazaikin parameters");
    case Family::EschGeneric:
      d.identity_component = "T3";
      d.dimension = 3;
      d.rank = 3;
      d.cohomogeneity = 4;
      d.full_group_open = true;
      d.note = "natural torus action only; isometry group not classified";
      return d;
    default: {
      E2Params e2 = std::holds_alternative<E2Params>(params)
                        ? e2_normalize(std::get<E2Params>(params))
                        : e2_normalize(*esch_to_e2(std::get<EschParams>(params)));
      return e2_descriptor(tag, e2);
    }
  }
}

CohomOneDiagram group_diagram(const SpaceParams& params) {
  FamilyTag tag = classify_family(params);
  if (tag.family == Family::E1 && tag.p) {
    i64 p = *tag.p;
    CohomOneDiagram d;
    d.group = std::string("SU(2)") + kTimes + "SU(2)";
    d.principal_isotropy = p % 2 == 0 ? "Z2 generated by (-id, id)" : "Z2 generated by (id, -id)";
    d.k_minus = std::string("Delta SU(2)") + "\xc2\xb7" + "H";
    d.k_plus = "S1 of slope (" + std::to_string(p + 1) + "," + std::to_string(p) + ")";
    d.slope = {p + 1, p};
    return d;
  }
  if (tag.family == Family::Bazaikin1 && tag.p) {
    i64 p = *tag.p;
    CohomOneDiagram d;
    d.group = "SU(4)";
    d.principal_isotropy = std::string("SU(2)") + "\xc2\xb7" + "Z2";
    d.k_minus = "Sp(2) u i Sp(2)";
    d.k_plus = std::string("SU(2)") + "\xc2\xb7" + "S1 of slope (" + std::to_string(p + 1) + "," +
               std::to_string(p) + ")";
    d.slope = {p + 1, p};
    return d;
  }
  throw error(errc::no_match, "group diagrams exist only for the cohomogeneity-one families E1 and B1");
}

namespace {

bool consume(const std::string& s, size_t& i, const char* tok) {
  size_t n = std::string(tok).size();
  if (s.compare(i, n, tok) == 0) {
    i += n;
    return true;
  }
  return false;
}

int token_dimension(const std::string& s, size_t& i) {
  if (consume(s, i, "SU(")) {
    int n = s[i] - '0';
    i += 2;  // digit + ')'
    return n * n - 1;
  }
  if (consume(s, i, "SO(")) {
    int n = s[i] - '0';
    i += 2;
    return n * (n - 1) / 2;
  }
  if (consume(s, i, "Sp(")) {
    int n = s[i] - '0';
    i += 2;
    return n * (2 * n + 1);
  }
  if (consume(s, i, "U(")) {
    int n = s[i] - '0';
    i += 2;
    return n * n;
  }
  if (consume(s, i, "T")) {
    int n = s[i] - '0';
    i += 1;
    return n;
  }
  if (consume(s, i, "S1")) return 1;
  if (consume(s, i, "Z")) {
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return 0;
  }
  throw error(errc::parse_error, "unknown group token in '" + s + "'");
}

int expr_dimension(const std::string& s, size_t& i);

int atom_dimension(const std::string& s, size_t& i) {
  if (i < s.size() && s[i] == '(') {
    // parenthesized subexpression unless it is a rank suffix handled above
    ++i;
    int d = expr_dimension(s, i);
    if (i < s.size() && s[i] == ')') ++i;
    return d;
  }
  return token_dimension(s, i);
}

int expr_dimension(const std::string& s, size_t& i) {
  int d = atom_dimension(s, i);
  while (i < s.size()) {
    if (consume(s, i, kTimes) || consume(s, i, "x") || consume(s, i, kSemidirect)) {
      d += atom_dimension(s, i);
    } else if (s[i] == '/') {
      ++i;
      d -= atom_dimension(s, i);
    } else {
      break;
    }
  }
  return d;
}

}  // namespace

int symbolic_dimension(const std::string& name) {
  size_t i = 0;
  int d = expr_dimension(name, i);
  if (i != name.size()) throw error(errc::parse_error, "trailing characters in group name '" + name + "'");
  return d;
}

}  // namespace esch
