#include "esch/fixed_point.hpp"


namespace esch {

namespace {

const std::array<std::array<int, 3>, 6> kPerm3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// Eigenvalue triple of diag(z^m) * u for u = diag(w*g, w^{-2}) embedded with
// the SU(2) part in the block of the repeated weights m[i] = m[j].
EigTriple side_triple(const std::array<i64, 3>& m, const RationalAngle& w, const Su2Element& g) {
  if (auto theta = g.diagonal_angle()) {
    return {EigMonomial{m[0], w + *theta}, EigMonomial{m[1], w - *theta}, EigMonomial{m[2], -(2 * w)}};
  }
  if (m[0] != m[1])
    throw error(errc::unsupported_factor,
                "non-diagonal SU(2) part needs a repeated weight pair on its side");
  RationalAngle lambda = g.eigen_angle();
  return {EigMonomial{m[0], w + lambda}, EigMonomial{m[0], w - lambda}, EigMonomial{m[2], -(2 * w)}};
}

std::vector<CongruenceEquation> bijection_system(const EigTriple& left, const EigTriple& right,
                                                 const std::array<int, 3>& sigma) {
  std::vector<CongruenceEquation> eqs;
  eqs.reserve(3);
  for (int i = 0; i < 3; ++i) {
    const auto& l = left[static_cast<size_t>(i)];
    const auto& r = right[static_cast<size_t>(sigma[static_cast<size_t>(i)])];
    eqs.push_back({l.z_exp - r.z_exp, r.const_angle - l.const_angle});
  }
  return eqs;
}

}  // namespace

std::pair<EigTriple, EigTriple> eig_triples(const EschParams& space, const IsometryTuple& t) {
  return {side_triple(space.a, t.w1, t.g1), side_triple(space.b, t.w2, t.g2)};
}

std::array<SolutionSet, 6> fixed_point_solutions(const EigTriple& left, const EigTriple& right) {
  std::array<SolutionSet, 6> out;
  for (size_t s = 0; s < 6; ++s) out[s] = solve_congruence_system(bijection_system(left, right, kPerm3[s]));
  return out;
}

std::optional<std::pair<RationalAngle, int>> fixed_point_witness(const EigTriple& left, const EigTriple& right) {
  for (size_t s = 0; s < 6; ++s) {
    SolutionSet sols = solve_congruence_system(bijection_system(left, right, kPerm3[s]));
    if (!sols.is_empty()) return std::make_pair(sols.first(), static_cast<int>(s));
  }
  return std::nullopt;
}

bool is_in_action_kernel(const EschParams& space, const IsometryTuple& t) {
  // a kernel element has diagonal matrices on both sides
  auto th1 = t.g1.diagonal_angle();
  auto th2 = t.g2.diagonal_angle();
  if (!th1 || !th2) return false;
  // entries of the two matrices, paired with their circle exponents
  std::array<std::pair<i64, RationalAngle>, 6> entries = {{
      {space.a[0], t.w1 + *th1},
      {space.a[1], t.w1 - *th1},
      {space.a[2], -(2 * t.w1)},
      {space.b[0], t.w2 + *th2},
      {space.b[1], t.w2 - *th2},
      {space.b[2], -(2 * t.w2)},
  }};
  // solve  m_i z + zeta = e_i  by eliminating zeta against the first entry
  std::vector<CongruenceEquation> eqs;
  for (size_t i = 1; i < 6; ++i)
    eqs.push_back({entries[i].first - entries[0].first, entries[i].second - entries[0].second});
  SolutionSet zs = solve_congruence_system(eqs);
  if (zs.is_empty()) return false;
  auto check = [&](const RationalAngle& z) {
    RationalAngle zeta = entries[0].second - entries[0].first * z;
    for (const auto& [m, e] : entries)
      if (!(m * z + zeta == e)) return false;
    return true;
  };
  if (zs.is_all_circle()) return check(RationalAngle::zero());
  for (const auto& z : zs.solutions)
    if (check(z)) return true;
  return false;
}

FreenessCertificate action_is_free(const EschParams& space, const FiniteIsometryGroup& group) {
  if (!esch_is_free(space)) throw error(errc::not_free, "space parameters are not free");
  if (!esch_is_positively_curved(space))
    throw error(errc::not_positively_curved, "space parameters are not positively curved");
  for (const auto& elem : group.elements) {
    if (is_in_action_kernel(space, elem)) continue;
    auto [left, right] = eig_triples(space, elem);
    if (auto w = fixed_point_witness(left, right)) {
      FixedPointWitness witness;
      witness.z = w->first;
      witness.bijection = w->second;
      witness.element = elem;
      return {Verdict::NotFree, witness};
    }
  }
  return {Verdict::Free, std::nullopt};
}

bool side_has_su2_factor(const EschParams& space, Side side) {
  const auto& m = side == Side::Left ? space.a : space.b;
  return m[0] == m[1];
}

FreenessCertificate so3_factor_is_free(const EschParams& space, Side side) {
  if (!side_has_su2_factor(space, side))
    throw error(errc::no_such_factor, "requested side carries no SU(2) factor");
  const auto& m = side == Side::Left ? space.a : space.b;
  const auto& n = side == Side::Left ? space.b : space.a;

  // factor side: {z^{m0} lambda, z^{m0} conj(lambda), z^{m2}};
  // other side: {z^{n_i}}.  Signs of lambda per factor slot:
  const std::array<int, 3> lambda_sign = {1, -1, 0};
  EigTriple factor = {EigMonomial{m[0], {}}, EigMonomial{m[1], {}}, EigMonomial{m[2], {}}};
  EigTriple other = {EigMonomial{n[0], {}}, EigMonomial{n[1], {}}, EigMonomial{n[2], {}}};

  auto witness_tuple = [&](const RationalAngle& lambda) {
    IsometryTuple t;
    (side == Side::Left ? t.g1 : t.g2) = Su2Element::torus(lambda);
    return t;
  };

  for (size_t s = 0; s < 6; ++s) {
    const auto& sigma = kPerm3[s];
    // match factor slot i against other slot sigma[i]; eliminate lambda
    std::vector<CongruenceEquation> eqs;
    std::optional<std::pair<i64, RationalAngle>> lam;  // lambda = coeff * z + const
    std::optional<std::pair<i64, RationalAngle>> lam_neg;
    for (int i = 0; i < 3; ++i) {
      i64 coeff = other[static_cast<size_t>(sigma[static_cast<size_t>(i)])].z_exp - factor[static_cast<size_t>(i)].z_exp;
      RationalAngle cons = other[static_cast<size_t>(sigma[static_cast<size_t>(i)])].const_angle -
                           factor[static_cast<size_t>(i)].const_angle;
      if (lambda_sign[static_cast<size_t>(i)] == 1) lam = {coeff, cons};
      else if (lambda_sign[static_cast<size_t>(i)] == -1) lam_neg = {coeff, cons};
      else eqs.push_back({-coeff, cons});
    }
    // lambda + (-lambda) = 0 gives one pure z-equation
    eqs.push_back({-(lam->first + lam_neg->first), lam->second + lam_neg->second});
    SolutionSet zs = solve_congruence_system(eqs);
    if (zs.is_empty()) continue;

    auto lambda_at = [&](const RationalAngle& z) { return lam->first * z + lam->second; };
    auto report = [&](const RationalAngle& z) -> std::optional<FreenessCertificate> {
      RationalAngle lambda = lambda_at(z);
      IsometryTuple t = witness_tuple(lambda);
      if (is_in_action_kernel(space, t)) return std::nullopt;
      FixedPointWitness w;
      w.z = z;
      w.bijection = static_cast<int>(s);
      w.element = t;
      w.free_eigen = lambda;
      return FreenessCertificate{Verdict::NotFree, w};
    };

    if (zs.is_all_circle()) {
      // unconstrained circle parameter; scan small denominators for a
      // non-kernel reconstruction (cannot stall: non-kernel lambdas are cofinite
      // unless the lambda expression is constant)
      if (lam->first == 0) {
        if (auto cert = report(RationalAngle::zero())) return *cert;
        continue;
      }
      for (i64 den = 1; den <= 48; ++den)
        for (i64 num = 0; num < den; ++num)
          if (auto cert = report(RationalAngle(num, den))) return *cert;
      continue;
    }
    for (const auto& z : zs.solutions)
      if (auto cert = report(z)) return *cert;
  }
  return {Verdict::Free, std::nullopt};
}

}  // namespace esch
