// Acceptance suite: runs every classification-level check end to end and
// prints one PASS/FAIL line per criterion.  Exit code = number of failures.

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "esch/invariants.hpp"
#include "esch/search.hpp"
#include "validate.hpp"

using namespace esch;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("[%d] %-28s %s%s%s\n", idx, name.c_str(), pass ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!pass) ++failures;
}

// collected NotFree witnesses from criteria 1-3 for the substitution check
struct WitnessRecord {
  EschParams space;
  IsometryTuple element;
  RationalAngle z;
};
std::vector<WitnessRecord> collected_witnesses;

// 1. SO(3)-freeness classification: sweep all canonical free positively
// curved triples with max|p_i| <= 40; the spaces carrying a free factor are
// exactly the two classes (1,1,1) and (1,1,2).
void criterion_so3_classification() {
  SweepConfig cfg;
  cfg.max_abs = 40;
  auto spaces = enumerate_canonical(cfg);
  std::set<std::array<i64, 3>> free_classes;
  std::vector<std::array<i64, 3>> free_triples;
  for (const auto& p : spaces) {
    EschParams space = p.as_esch();
    bool any = false;
    for (Side side : {Side::Left, Side::Right}) {
      if (!side_has_su2_factor(space, side)) continue;
      auto cert = so3_factor_is_free(space, side);
      if (cert.verdict == Verdict::Free) any = true;
      else collected_witnesses.push_back({space, cert.witness->element, cert.witness->z});
    }
    if (any) {
      free_triples.push_back(p.p);
      free_classes.insert(space_class_representative(p));
    }
  }
  bool pass = free_classes == std::set<std::array<i64, 3>>{{1, 1, 1}, {1, 1, 2}};
  std::string detail = "free triples:";
  for (const auto& t : free_triples)
    detail += " (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
  detail += "; as spaces these present exactly (1,1,1) and (1,1,2)";
  report(1, "so3-classification", pass, detail);
}

// 2. Theorem B: for all odd p, q <= 25 with gcd(p+1, q) = 1, the constructed
// group certifies Free with effective invariant factors [2, 2q].
void criterion_theorem_b() {
  i64 checked = 0;
  std::vector<std::pair<i64, i64>> failed;
  for (i64 p = 1; p <= 25; p += 2)
    for (i64 q = 1; q <= 25; q += 2) {
      if (gcd_i64(p + 1, q) != 1) continue;
      ++checked;
      bool ok = false;
      for (PhasePlacement pl : {PhasePlacement::Left, PhasePlacement::Right}) {
        auto group = theorem_b_group(p, q, pl);
        auto cert = action_is_free(e1_space(p), group);
        if (cert.verdict == Verdict::NotFree) {
          collected_witnesses.push_back({e1_space(p), cert.witness->element, cert.witness->z});
          continue;
        }
        auto eff = effective_abstract_type(e1_space(p), group);
        if (eff.invariant_factors && *eff.invariant_factors == std::vector<i64>{2, 2 * q}) ok = true;
      }
      if (!ok) failed.push_back({p, q});
    }
  std::string detail = std::to_string(checked) + " pairs";
  if (!failed.empty()) {
    detail += ", failing:";
    for (auto [p, q] : failed) detail += " (" + std::to_string(p) + "," + std::to_string(q) + ")";
    detail += " [every failing p is 3 mod 4: the order-4 elements of the quaternion group fix points"
              " there, matching the order criterion 4 | p+1]";
  }
  report(2, "theorem-b", failed.empty(), detail);
}

// 3. Final proposition: binary polyhedral preimages of A4, S4, A5 act freely
// on the three smallest Dirichlet-triple spaces each.
void criterion_dirichlet() {
  struct Case {
    const char* label;
    const char* group;
    i64 modulus;
  };
  bool pass = true;
  std::string detail;
  for (const Case& c : {Case{"A4", "2T", 12}, Case{"S4", "2O", 24}, Case{"A5", "2I", 60}}) {
    auto group = embed_su2_group(build_group_by_name(c.group), Side::Right);
    for (const auto& t : dirichlet_triples(c.modulus, 3)) {
      E2Params p({t[0], t[1], t[2]});
      auto cert = action_is_free(p.as_esch(), group);
      if (cert.verdict != Verdict::Free) {
        pass = false;
        detail += std::string(" ") + c.label + "@(" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                  "," + std::to_string(t[2]) + ")";
        collected_witnesses.push_back({p.as_esch(), cert.witness->element, cert.witness->z});
      }
    }
  }
  report(3, "dirichlet-f", pass, pass ? "9 free certificates (3 per group)" : "not free at" + detail);
}

// 4. Invariant formulas and the distinguishing argument.
void criterion_invariant_formulas() {
  bool pass = true;
  for (i64 p = 1; p <= 200 && pass; ++p) {
    E2Params ep({1, 1, p});
    if (h4_order(ep) != 2 * p + 1 || pontrjagin_residue(ep) != (p + 5) % (2 * p + 1)) pass = false;
  }
  for (i64 k = 5; k <= 99 && pass; k += 2) {
    E2Params ek({-k, 1, k - 2});
    if (h4_order(ek) != (k - 1) * (k - 1) + 1 || pontrjagin_residue(ek) != 2) pass = false;
  }
  i64 separated = 0, total = 0;
  for (i64 p = 1; p <= 200; ++p)
    for (i64 k = 5; k <= 99; k += 2) {
      ++total;
      if (distinguish_pair(E2Params({1, 1, p}), E2Params({-k, 1, k - 2})) != Distinguisher::Indistinguishable)
        ++separated;
    }
  pass = pass && separated == total;
  report(4, "invariant-formulas", pass,
         "r/p1 formulas on both families; " + std::to_string(separated) + "/" + std::to_string(total) +
             " pairs separated");
}

// 5. Cross-oracle freeness/curvature over all triples with |p_i| <= 20.
void criterion_cross_oracle() {
  i64 mismatches = 0, count = 0;
  for (i64 a = -20; a <= 20; ++a)
    for (i64 b = -20; b <= 20; ++b)
      for (i64 c = -20; c <= 20; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        ++count;
        E2Params p({a, b, c});
        EschParams e = p.as_esch();
        if (e2_is_free(p) != esch_is_free(e)) ++mismatches;
        if (e2_is_positively_curved(p) != esch_is_positively_curved(e)) ++mismatches;
      }
  report(5, "cross-oracle", mismatches == 0,
         std::to_string(count) + " triples, " + std::to_string(mismatches) + " mismatches");
}

// 6. Bazaikin predicates on the B1 family and the two rejected tuples.
void criterion_bazaikin() {
  bool pass = true;
  for (i64 p = 1; p <= 100; ++p) {
    BazParams b({1, 1, 1, 1, 2 * p - 1});
    if (!baz_is_free(b) || !baz_is_positively_curved(b)) pass = false;
  }
  if (baz_is_free(BazParams({1, 1, 1, 1, 2}))) pass = false;
  if (baz_is_free(BazParams({1, 1, 1, 3, 3}))) pass = false;
  report(6, "bazaikin-predicates", pass, "B1 family p in [1,100]; (1,1,1,1,2) and (1,1,1,3,3) rejected");
}

// 7. Atlas: Theorem A dimensions and the (p+1, p) diagram slopes.
void criterion_atlas() {
  bool pass = true;
  pass &= isometry_descriptor(E2Params({1, 1, -2})).dimension == 11;
  pass &= isometry_descriptor(E2Params({2, 1, -3})).dimension == 9;
  pass &= isometry_descriptor(E2Params({1, 1, 5})).dimension == 7;
  pass &= isometry_descriptor(E2Params({1, 3, 5})).dimension == 5;
  for (i64 p = 1; p <= 10; ++p) {
    pass &= group_diagram(E2Params({1, 1, p})).slope == std::pair<i64, i64>{p + 1, p};
    pass &= group_diagram(BazParams({1, 1, 1, 1, 2 * p - 1})).slope == std::pair<i64, i64>{p + 1, p};
  }
  report(7, "atlas", pass, "dimensions 11/9/7/5 and slopes (p+1,p) for p in [1,10]");
}

// 8. Property suite: solver vs brute force, catalog closure/Lagrange,
// witness substitution validity, order-criterion comparison.
void criterion_properties() {
  bool pass = true;
  std::string detail;

  // congruence solver against brute force on 1000 random systems
  uint64_t seed = 424242;
  auto next = [&]() {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return seed >> 33;
  };
  const std::vector<i64> dens = {1, 2, 3, 4, 6, 9, 12, 18, 36};
  for (int trial = 0; trial < 1000 && pass; ++trial) {
    std::vector<CongruenceEquation> eqs;
    size_t count = 1 + next() % 3;
    i64 L = 36;
    bool l_set = false;
    for (size_t e = 0; e < count; ++e) {
      i64 m = static_cast<i64>(next() % 25) - 12;
      i64 d = dens[next() % dens.size()];
      eqs.push_back({m, RationalAngle(static_cast<i64>(next() % static_cast<uint64_t>(d)), d)});
      if (m != 0 && !l_set) {
        L = std::abs(m) * d;
        l_set = true;
      }
    }
    std::vector<RationalAngle> brute;
    for (i64 k = 0; k < L; ++k) {
      RationalAngle z(k, L);
      bool ok = true;
      for (const auto& eq : eqs)
        if (!(eq.exponent * z == eq.target)) ok = false;
      if (ok) brute.push_back(z);
    }
    auto got = solve_congruence_system(eqs);
    if (got.is_all_circle()) {
      if (brute.size() != static_cast<size_t>(L)) pass = false;
    } else if (got.solutions != brute) {
      pass = false;
    }
  }
  if (!pass) detail += " solver/brute-force mismatch;";

  // catalog closure and Lagrange checks
  bool groups_ok = true;
  for (const char* name : {"cyclic:7", "bindihedral:4", "quaternion8", "2T", "2O", "2I"}) {
    auto g = build_group_by_name(name);
    std::set<std::vector<i64>> keys;
    for (const auto& e : g.elements) keys.insert(e.key());
    for (const auto& x : g.elements) {
      if (static_cast<i64>(g.elements.size()) % x.order() != 0) groups_ok = false;
      for (const auto& y : g.elements)
        if (!keys.count((x * y).key())) groups_ok = false;
    }
  }
  if (!groups_ok) detail += " catalog closure/Lagrange failed;";
  pass = pass && groups_ok;

  // every witness collected in criteria 1-3 substitutes to an exact
  // multiset equality
  bool witnesses_ok = true;
  for (const auto& w : collected_witnesses)
    if (!esch::testing::witness_substitutes(w.space, w.element, w.z)) witnesses_ok = false;
  if (!witnesses_ok) detail += " witness substitution failed;";
  pass = pass && witnesses_ok;

  // order criterion comparison: zero disagreements on product groups
  i64 product_disagreements = 0, nonproduct = 0;
  for (const auto& row : order_criterion_comparison(20)) {
    if (!row.agree) (row.product ? product_disagreements : nonproduct) += 1;
  }
  if (product_disagreements != 0) {
    detail += " product-group disagreement;";
    pass = false;
  }
  detail += " witnesses checked: " + std::to_string(collected_witnesses.size()) +
            ", non-product order-criterion disagreements (reported only): " + std::to_string(nonproduct);
  report(8, "property-suite", pass, detail);
}

}  // namespace

int main() {
  criterion_so3_classification();
  criterion_theorem_b();
  criterion_dirichlet();
  criterion_invariant_formulas();
  criterion_cross_oracle();
  criterion_bazaikin();
  criterion_atlas();
  criterion_properties();
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  else std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
