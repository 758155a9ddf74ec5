#include "esch/serialize.hpp"

#include <sstream>

namespace esch {

json to_json(const RationalAngle& a) { return a.str(); }

namespace {

json rational_json(const Rational& r) { return r.str(); }

json field_json(const FieldElement& f) {
  return json::array({rational_json(f.a), rational_json(f.b), rational_json(f.c), rational_json(f.d)});
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const error&) {
    throw;
  } catch (...) {
    throw error(errc::parse_error, "bad rational literal '" + s + "'");
  }
}

FieldElement field_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw error(errc::parse_error, "field element needs 4 rational coefficients");
  return FieldElement(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
                      parse_rational(j[2].get<std::string>()), parse_rational(j[3].get<std::string>()));
}

}  // namespace

json to_json(const Su2Element& e) {
  switch (e.rep) {
    case Su2Element::Rep::Torus: return json{{"torus", e.angle.str()}};
    case Su2Element::Rep::JCoset: return json{{"jcoset", e.angle.str()}};
    default:
      return json{{"quat", json::array({field_json(e.quat.w), field_json(e.quat.x), field_json(e.quat.y),
                                        field_json(e.quat.z)})}};
  }
}

json to_json(const IsometryTuple& t) {
  return json{{"w1", t.w1.str()}, {"g1", to_json(t.g1)}, {"w2", t.w2.str()}, {"g2", to_json(t.g2)}};
}

json to_json(const EschParams& p) {
  return json{{"type", "eschenburg"}, {"a", p.a}, {"b", p.b}};
}

json to_json(const E2Params& p) { return json{{"type", "e2"}, {"p", p.p}}; }

json to_json(const BazParams& p) { return json{{"type", "bazaikin"}, {"p", p.p}, {"q", p.q}}; }

json to_json(const SpaceParams& p) {
  if (const auto* e2 = std::get_if<E2Params>(&p)) return to_json(*e2);
  if (const auto* e = std::get_if<EschParams>(&p)) return to_json(*e);
  if (const auto* b = std::get_if<BazParams>(&p)) return to_json(*b);
  return json{{"type", "twisted_flag"}};
}

json to_json(const FamilyTag& tag) {
  json j{{"family", family_name(tag.family)}};
  if (tag.p) j["p"] = *tag.p;
  if (tag.aw) j["aloff_wallach"] = json::array({tag.aw->first, tag.aw->second});
  if (tag.cohomogeneity) j["cohomogeneity"] = *tag.cohomogeneity;
  return j;
}

json to_json(const AbstractDescriptor& d) {
  json hist = json::object();
  for (const auto& [o, c] : d.order_histogram) hist[std::to_string(o)] = c;
  json j{{"order", d.order}, {"order_histogram", hist}, {"abelian", d.abelian}};
  if (d.invariant_factors) j["invariant_factors"] = *d.invariant_factors;
  return j;
}

json to_json(const IsometryDescriptor& d) {
  json j{{"identity_component", d.identity_component}, {"dimension", d.dimension}, {"rank", d.rank}};
  if (d.full_group) j["full_group"] = *d.full_group;
  if (d.component_count) j["component_count"] = *d.component_count;
  if (d.cohomogeneity) j["cohomogeneity"] = *d.cohomogeneity;
  if (d.full_group_open) j["full_group_open"] = true;
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

json to_json(const CohomOneDiagram& d) {
  return json{{"group", d.group},
              {"principal_isotropy", d.principal_isotropy},
              {"k_minus", d.k_minus},
              {"k_plus", d.k_plus},
              {"slope", json::array({d.slope.first, d.slope.second})}};
}

json to_json(const E2Invariants& inv) {
  return json{{"r", inv.r}, {"p1_residue", inv.p1_residue}, {"vertex_orders", inv.vertex_orders}};
}

json certificate_json(const SpaceParams& space, const AbstractDescriptor& group,
                      const FreenessCertificate& cert) {
  json j{{"space", to_json(space)},
         {"group", to_json(group)},
         {"verdict", cert.verdict == Verdict::Free ? "free" : "not_free"}};
  if (cert.witness) {
    json w{{"z", cert.witness->z.str()},
           {"bijection", cert.witness->bijection},
           {"element", to_json(cert.witness->element)}};
    if (cert.witness->free_eigen) w["lambda"] = cert.witness->free_eigen->str();
    j["witness"] = w;
  }
  return j;
}

namespace {

std::vector<i64> parse_int_list(const std::string& s) {
  std::vector<i64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (...) {
      throw error(errc::parse_error, "bad integer '" + item + "' in '" + s + "'");
    }
  }
  return out;
}

}  // namespace

SpaceParams parse_space(const std::string& literal) {
  if (literal == "twisted-flag" || literal == "twistedflag" || literal == "e6" || literal == "E6")
    return TwistedFlag{};
  auto slash = literal.find('/');
  if (slash != std::string::npos) {
    auto a = parse_int_list(literal.substr(0, slash));
    auto b = parse_int_list(literal.substr(slash + 1));
    if (a.size() != 3 || b.size() != 3)
      throw error(errc::parse_error, "Eschenburg literal needs a1,a2,a3/b1,b2,b3");
    return EschParams({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
  }
  auto v = parse_int_list(literal);
  if (v.size() == 3) return E2Params({v[0], v[1], v[2]});
  if (v.size() == 5) return BazParams({v[0], v[1], v[2], v[3], v[4]});
  throw error(errc::parse_error, "space literal needs 3 entries (E2), 5 entries (Bazaikin), or a1,a2,a3/b1,b2,b3");
}

RationalAngle parse_angle(const std::string& literal) {
  Rational r = parse_rational(literal);
  return RationalAngle(r.num, r.den);
}

Su2Element su2_from_json(const json& j) {
  if (j.contains("torus")) return Su2Element::torus(parse_angle(j["torus"].get<std::string>()));
  if (j.contains("jcoset")) return Su2Element::jcoset(parse_angle(j["jcoset"].get<std::string>()));
  if (j.contains("quat")) {
    const auto& q = j["quat"];
    if (!q.is_array() || q.size() != 4) throw error(errc::parse_error, "quat needs 4 field elements");
    UnitQuaternion quat(field_from_json(q[0]), field_from_json(q[1]), field_from_json(q[2]), field_from_json(q[3]));
    if (!quat.is_unit()) throw error(errc::parse_error, "quaternion is not unit norm");
    return Su2Element::from_quat(quat);
  }
  throw error(errc::parse_error, "SU(2) element needs one of torus/jcoset/quat");
}

IsometryTuple tuple_from_json(const json& j) {
  IsometryTuple t;
  if (j.contains("w1")) t.w1 = parse_angle(j["w1"].get<std::string>());
  if (j.contains("g1")) t.g1 = su2_from_json(j["g1"]);
  if (j.contains("w2")) t.w2 = parse_angle(j["w2"].get<std::string>());
  if (j.contains("g2")) t.g2 = su2_from_json(j["g2"]);
  return t;
}

}  // namespace esch
