#include "esch/spaces.hpp"

#include <algorithm>

namespace esch {

namespace {

const std::array<std::array<int, 3>, 6> kPerm3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

bool esch_is_free(const EschParams& params) {
  for (const auto& s : kPerm3) {
    i64 d1 = params.a[0] - params.b[s[0]];
    i64 d2 = params.a[1] - params.b[s[1]];
    if (gcd_i64(d1, d2) != 1) return false;
  }
  return true;
}

bool esch_is_positively_curved(const EschParams& params) {
  auto outside = [](const std::array<i64, 3>& v, const std::array<i64, 3>& range) {
    i64 lo = std::min({range[0], range[1], range[2]});
    i64 hi = std::max({range[0], range[1], range[2]});
    for (i64 x : v)
      if (x >= lo && x <= hi) return false;
    return true;
  };
  return outside(params.b, params.a) || outside(params.a, params.b);
}

E2Params e2_normalize(const E2Params& p) {
  auto sorted = [](std::array<i64, 3> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::array<i64, 3> plus = sorted(p.p);
  std::array<i64, 3> minus = sorted({-p.p[0], -p.p[1], -p.p[2]});
  auto positives = [](const std::array<i64, 3>& v) { return std::count_if(v.begin(), v.end(), [](i64 x) { return x > 0; }); };
  auto np = positives(plus), nm = positives(minus);
  if (np != nm) return E2Params(np > nm ? plus : minus);
  std::array<i64, 3> kp = {plus[2], plus[1], plus[0]};
  std::array<i64, 3> km = {minus[2], minus[1], minus[0]};
  return E2Params(kp >= km ? plus : minus);
}

bool e2_is_free(const E2Params& p) {
  return gcd_i64(p.p[0], p.p[1]) == 1 && gcd_i64(p.p[0], p.p[2]) == 1 && gcd_i64(p.p[1], p.p[2]) == 1;
}

bool e2_is_positively_curved(const E2Params& p) {
  // test both branches of the sorted-form condition over all orders and signs
  for (int sign : {1, -1}) {
    for (const auto& s : kPerm3) {
      i64 p1 = sign * p.p[s[0]], p2 = sign * p.p[s[1]], p3 = sign * p.p[s[2]];
      if (0 < p1 && p1 <= p2 && p2 <= p3) return true;
      if (0 < p2 && p2 <= p3 && p1 < -p3) return true;
    }
  }
  return false;
}

bool baz_is_free(const BazParams& p) {
  for (i64 x : p.p)
    if ((x % 2 + 2) % 2 == 0) return false;
  // all unordered disjoint index pairs {i,j}, {k,l}
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        if (k == i || k == j) continue;
        for (int l = k + 1; l < 5; ++l) {
          if (l == i || l == j) continue;
          if (gcd_i64(p.p[i] + p.p[j], p.p[k] + p.p[l]) != 2) return false;
        }
      }
  return true;
}

bool baz_is_positively_curved(const BazParams& p) {
  std::array<i64, 5> s = p.p;
  std::sort(s.begin(), s.end());
  return s[0] + s[1] > 0;
}

std::optional<E2Params> esch_to_e2(const EschParams& params) {
  auto repeated_shift = [](const std::array<i64, 3>& v) -> std::optional<i64> {
    if (v[0] == v[1]) return v[0];
    if (v[0] == v[2]) return v[0];
    if (v[1] == v[2]) return v[1];
    return std::nullopt;
  };
  if (auto t = repeated_shift(params.b)) {
    std::array<i64, 3> p = {params.a[0] - *t, params.a[1] - *t, params.a[2] - *t};
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) return std::nullopt;
    return E2Params(p);
  }
  if (auto t = repeated_shift(params.a)) {
    // inverse map g -> g^{-1} swaps the two sides
    std::array<i64, 3> p = {params.b[0] - *t, params.b[1] - *t, params.b[2] - *t};
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) return std::nullopt;
    return E2Params(p);
  }
  return std::nullopt;
}

namespace {

FamilyTag classify_e2(const E2Params& p) {
  if (!e2_is_free(p)) throw error(errc::not_free, "E2 triple is not free: some gcd(p_i, p_j) > 1");
  if (!e2_is_positively_curved(p))
    throw error(errc::not_positively_curved, "E2 triple fails the positive curvature condition");
  E2Params n = e2_normalize(p);
  FamilyTag tag{Family::E2Generic, std::nullopt, std::nullopt, 2};
  if (n.sum() == 0) {
    // Aloff-Wallach: recover (k,l) with k >= l > 0 from the same-sign pair
    std::array<i64, 3> v = n.p;
    i64 k = 0, l = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if ((v[i] > 0) == (v[j] > 0)) {
          k = std::max(std::abs(v[i]), std::abs(v[j]));
          l = std::min(std::abs(v[i]), std::abs(v[j]));
        }
    tag.family = Family::AloffWallach;
    tag.aw = {k, l};
    tag.cohomogeneity = 0;
    return tag;
  }
  if (n.p[0] == 1 && n.p[1] == 1 && n.p[2] >= 1) {
    tag.family = Family::E1;
    tag.p = n.p[2];
    tag.cohomogeneity = 1;
    if (n.p[2] == 1) {
      // E_1 is the homogeneous Aloff-Wallach space A_{1,1}
      tag.aw = {1, 1};
      tag.cohomogeneity = 0;
    }
    return tag;
  }
  return tag;
}

}  // namespace

FamilyTag classify_family(const SpaceParams& params) {
  if (std::holds_alternative<TwistedFlag>(params)) {
    return FamilyTag{Family::TwistedFlag, std::nullopt, std::nullopt, 2};
  }
  if (const auto* e2 = std::get_if<E2Params>(&params)) return classify_e2(*e2);
  if (const auto* esch = std::get_if<EschParams>(&params)) {
    if (!esch_is_free(*esch)) throw error(errc::not_free, "Eschenburg parameters are not free");
    if (!esch_is_positively_curved(*esch))
      throw error(errc::not_positively_curved, "Eschenburg parameters fail the curvature condition");
    if (auto e2r = esch_to_e2(*esch)) return classify_e2(*e2r);
    return FamilyTag{Family::EschGeneric, std::nullopt, std::nullopt, 4};
  }
  const auto& baz = std::get<BazParams>(params);
  if (!baz_is_free(baz)) throw error(errc::not_free, "Bazaikin parameters are not free");
  if (!baz_is_positively_curved(baz))
    throw error(errc::not_positively_curved, "Bazaikin parameters fail the curvature condition");
  std::array<i64, 5> s = baz.p;
  std::sort(s.begin(), s.end());
  if (s[0] == 1 && s[1] == 1 && s[2] == 1 && s[3] == 1 && s[4] >= 1 && s[4] % 2 == 1) {
    FamilyTag tag{Family::Bazaikin1, (s[4] + 1) / 2, std::nullopt, 1};
    return tag;
  }
  return FamilyTag{Family::BazaikinGeneric, std::nullopt, std::nullopt, std::nullopt};
}

std::string family_name(Family f) {
  switch (f) {
    case Family::AloffWallach: return "AloffWallach";
    case Family::E1: return "E1";
    case Family::E2Generic: return "E2Generic";
    case Family::EschGeneric: return "EschGeneric";
    case Family::TwistedFlag: return "TwistedFlag";
    case Family::Bazaikin1: return "Bazaikin1";
    case Family::BazaikinGeneric: return "BazaikinGeneric";
  }
  return "?";
}

}  // namespace esch
