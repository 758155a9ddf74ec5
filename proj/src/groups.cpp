#include "esch/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace esch {

std::vector<i64> IsometryTuple::key() const {
  std::vector<i64> k = {w1.num, w1.den, w2.num, w2.den};
  auto k1 = g1.key();
  auto k2 = g2.key();
  k.push_back(static_cast<i64>(k1.size()));
  k.insert(k.end(), k1.begin(), k1.end());
  k.insert(k.end(), k2.begin(), k2.end());
  return k;
}

namespace {

void sort_by_key(std::vector<Su2Element>& v) {
  std::sort(v.begin(), v.end(), [](const Su2Element& a, const Su2Element& b) { return a.key() < b.key(); });
}

std::vector<Su2Element> close_su2(const std::vector<Su2Element>& gens, i64 cap) {
  std::set<std::vector<i64>> seen;
  std::vector<Su2Element> out;
  std::deque<Su2Element> work;
  auto push = [&](const Su2Element& e) {
    if (seen.insert(e.key()).second) {
      out.push_back(e);
      work.push_back(e);
    }
  };
  push(Su2Element::identity());
  for (const auto& g : gens) push(g);
  while (!work.empty()) {
    Su2Element x = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      push(x * g);
      if (static_cast<i64>(out.size()) > cap) throw error(errc::cap_exceeded, "SU(2) closure exceeds cap");
    }
  }
  sort_by_key(out);
  return out;
}

}  // namespace

FiniteSu2Group build_group(Su2GroupKind kind, i64 n) {
  FiniteSu2Group g;
  g.kind = kind;
  g.n = n;
  switch (kind) {
    case Su2GroupKind::Cyclic: {
      if (n < 1) throw error(errc::parse_error, "cyclic group needs n >= 1");
      for (i64 k = 0; k < n; ++k) g.elements.push_back(Su2Element::torus(RationalAngle(k, n)));
      break;
    }
    case Su2GroupKind::BinaryDihedral: {
      if (n < 1) throw error(errc::parse_error, "binary dihedral group needs n >= 1");
      for (i64 k = 0; k < 2 * n; ++k) g.elements.push_back(Su2Element::torus(RationalAngle(k, 2 * n)));
      for (i64 k = 0; k < 2 * n; ++k) g.elements.push_back(Su2Element::jcoset(RationalAngle(k, 2 * n)));
      break;
    }
    case Su2GroupKind::BinaryTetrahedral: {
      auto w = UnitQuaternion(half(), half(), half(), half());
      g.elements = close_su2({Su2Element::from_quat(UnitQuaternion::i()), Su2Element::from_quat(w)}, 48);
      break;
    }
    case Su2GroupKind::BinaryOctahedral: {
      auto w = UnitQuaternion(half(), half(), half(), half());
      auto s = UnitQuaternion(sqrt2_over_2(), sqrt2_over_2(), FieldElement(), FieldElement());
      g.elements = close_su2(
          {Su2Element::from_quat(UnitQuaternion::i()), Su2Element::from_quat(w), Su2Element::from_quat(s)}, 96);
      break;
    }
    case Su2GroupKind::BinaryIcosahedral: {
      auto w = UnitQuaternion(half(), half(), half(), half());
      // (phi + phi^{-1} i + j)/2 with phi the golden ratio
      FieldElement phi_half(Rational(1, 4), Rational(0), Rational(1, 4));
      FieldElement inv_phi_half(Rational(-1, 4), Rational(0), Rational(1, 4));
      auto s = UnitQuaternion(phi_half, inv_phi_half, half(), FieldElement());
      g.elements = close_su2({Su2Element::from_quat(w), Su2Element::from_quat(s)}, 240);
      break;
    }
  }
  sort_by_key(g.elements);
  return g;
}

FiniteSu2Group build_group_by_name(const std::string& name) {
  if (name == "quaternion8") return build_group(Su2GroupKind::BinaryDihedral, 2);
  if (name == "2T") return build_group(Su2GroupKind::BinaryTetrahedral);
  if (name == "2O") return build_group(Su2GroupKind::BinaryOctahedral);
  if (name == "2I") return build_group(Su2GroupKind::BinaryIcosahedral);
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    i64 n = 0;
    try {
      n = std::stoll(name.substr(colon + 1));
    } catch (...) {
      throw error(errc::parse_error, "bad group parameter in '" + name + "'");
    }
    if (head == "cyclic") return build_group(Su2GroupKind::Cyclic, n);
    if (head == "bindihedral") return build_group(Su2GroupKind::BinaryDihedral, n);
  }
  throw error(errc::parse_error, "unknown group name '" + name + "'");
}

FiniteIsometryGroup close_subgroup(const std::vector<IsometryTuple>& generators, i64 cap) {
  std::set<std::vector<i64>> seen;
  FiniteIsometryGroup g;
  g.generators = generators;
  std::deque<IsometryTuple> work;
  auto push = [&](const IsometryTuple& t) {
    if (seen.insert(t.key()).second) {
      g.elements.push_back(t);
      work.push_back(t);
    }
  };
  push(IsometryTuple::identity());
  for (const auto& t : generators) push(t);
  while (!work.empty()) {
    IsometryTuple x = work.front();
    work.pop_front();
    for (const auto& t : generators) {
      push(x * t);
      if (static_cast<i64>(g.elements.size()) > cap)
        throw error(errc::cap_exceeded, "subgroup closure exceeds cap");
    }
  }
  std::sort(g.elements.begin(), g.elements.end(),
            [](const IsometryTuple& a, const IsometryTuple& b) { return a.key() < b.key(); });
  return g;
}

FiniteIsometryGroup embed_su2_group(const FiniteSu2Group& g, Side side, i64 cap) {
  std::vector<IsometryTuple> gens;
  gens.reserve(g.elements.size());
  for (const auto& e : g.elements) {
    IsometryTuple t;
    (side == Side::Left ? t.g1 : t.g2) = e;
    gens.push_back(t);
  }
  return close_subgroup(gens, cap);
}

AbstractDescriptor abstract_type(const FiniteIsometryGroup& g) {
  AbstractDescriptor d;
  d.order = g.order();
  for (const auto& t : g.elements) d.order_histogram[t.order()] += 1;
  // generator-pairwise commutation decides abelianness of the whole group
  const auto& gens = g.generators.empty() ? g.elements : g.generators;
  d.abelian = true;
  for (size_t i = 0; i < gens.size() && d.abelian; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!((gens[i] * gens[j]) == (gens[j] * gens[i]))) {
        d.abelian = false;
        break;
      }
  if (d.abelian) d.invariant_factors = invariant_factors_from_counts(d.order, d.order_histogram);
  return d;
}

std::vector<i64> invariant_factors_from_counts(i64 order, const std::map<i64, i64>& order_histogram) {
  if (order == 1) return {};
  // factor the group order
  std::vector<i64> primes;
  i64 m = order;
  for (i64 p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);

  // per prime: partition of exponents, as counts of parts >= k
  std::vector<std::vector<i64>> partitions;  // descending part lists
  for (i64 p : primes) {
    std::vector<i64> counts;  // counts[k-1] = #parts >= k
    i64 prev = 1;             // N(p^0) = 1
    for (i64 pk = p; pk <= mul_i64(order, p); pk = mul_i64(pk, p)) {
      i64 nk = 0;  // #{x : x^{p^k} = e} = #{x : ord(x) | p^k}
      for (const auto& [o, cnt] : order_histogram)
        if (pk % o == 0) nk += cnt;
      i64 ratio = nk / prev;
      i64 parts = 0;
      while (ratio > 1) {
        ratio /= p;
        ++parts;
      }
      if (parts == 0) break;
      counts.push_back(parts);
      prev = nk;
    }
    // counts is the conjugate partition; transpose to part sizes
    std::vector<i64> parts;
    if (!counts.empty()) {
      parts.assign(static_cast<size_t>(counts[0]), 0);
      for (size_t k = 0; k < counts.size(); ++k)
        for (i64 i = 0; i < counts[k]; ++i) parts[static_cast<size_t>(i)] += 1;
    }
    partitions.push_back(parts);  // descending
  }

  size_t width = 0;
  for (const auto& parts : partitions) width = std::max(width, parts.size());
  std::vector<i64> factors(width, 1);  // factors[0] = largest
  for (size_t pi = 0; pi < partitions.size(); ++pi) {
    for (size_t j = 0; j < partitions[pi].size(); ++j) {
      i64 pe = 1;
      for (i64 e = 0; e < partitions[pi][j]; ++e) pe = mul_i64(pe, primes[pi]);
      factors[j] = mul_i64(factors[j], pe);
    }
  }
  std::reverse(factors.begin(), factors.end());  // ascending, d_i | d_{i+1}
  return factors;
}

}  // namespace esch
