#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "esch/search.hpp"

namespace py = pybind11;

namespace {

// The python layer works with plain dicts; everything crosses the boundary
// as JSON text and is parsed on the python side.
std::string classify_json(const std::string& space) {
  auto params = esch::parse_space(space);
  auto tag = esch::classify_family(params);
  esch::json out = esch::to_json(tag);
  out["space"] = esch::to_json(params);
  try {
    out["isometry"] = esch::to_json(esch::isometry_descriptor(params));
  } catch (const esch::error& e) {
    if (e.code() != esch::errc::no_match) throw;
  }
  return out.dump();
}

std::string invariants_json(const std::string& space) {
  auto params = esch::parse_space(space);
  const auto* e2 = std::get_if<esch::E2Params>(&params);
  if (!e2) throw esch::error(esch::errc::parse_error, "invariants need an E2 triple p1,p2,p3");
  return esch::to_json(esch::e2_invariants(*e2)).dump();
}

std::string diagram_json(const std::string& space) {
  return esch::to_json(esch::group_diagram(esch::parse_space(space))).dump();
}

std::string certify_free_json(const std::string& space, const std::string& group, const std::string& side) {
  auto params = esch::parse_space(space);
  if (!std::holds_alternative<esch::E2Params>(params) && !std::holds_alternative<esch::EschParams>(params))
    throw esch::error(esch::errc::parse_error, "certify_free needs Eschenburg-type parameters");
  esch::EschParams esch_space = std::holds_alternative<esch::E2Params>(params)
                                    ? std::get<esch::E2Params>(params).as_esch()
                                    : std::get<esch::EschParams>(params);
  esch::Side s = side == "left" ? esch::Side::Left : esch::Side::Right;
  if (group == "so3" || group == "su2") {
    auto cert = esch::so3_factor_is_free(esch_space, s);
    esch::json out{{"space", esch::to_json(params)},
                   {"group", group + "-factor:" + side},
                   {"verdict", cert.verdict == esch::Verdict::Free ? "free" : "not_free"}};
    if (cert.witness)
      out["witness"] = {{"z", cert.witness->z.str()}, {"lambda", cert.witness->free_eigen->str()}};
    return out.dump();
  }
  auto g = esch::embed_su2_group(esch::build_group_by_name(group), s);
  auto cert = esch::action_is_free(esch_space, g);
  return esch::certificate_json(params, esch::effective_abstract_type(esch_space, g), cert).dump();
}

std::string verify_json(const std::string& suite, esch::i64 max_abs, esch::i64 p_max, esch::i64 q_max, int jobs) {
  esch::VerifyOptions opt{max_abs, p_max, q_max, jobs};
  auto rep = esch::verify_theorems(suite, opt);
  esch::json out{{"records", rep.records}, {"summary", rep.summary}, {"pass", rep.pass}};
  return out.dump();
}

std::vector<std::array<esch::i64, 3>> enumerate_py(esch::i64 max_abs, esch::i64 shard_index, esch::i64 shard_count) {
  esch::SweepConfig cfg;
  cfg.max_abs = max_abs;
  cfg.shard = {shard_index, shard_count};
  std::vector<std::array<esch::i64, 3>> out;
  for (const auto& t : esch::enumerate_canonical(cfg)) out.push_back(t.p);
  return out;
}

std::string solve_congruences_json(const std::vector<std::pair<esch::i64, std::string>>& eqs) {
  std::vector<esch::CongruenceEquation> sys;
  for (const auto& [m, target] : eqs) sys.push_back({m, esch::parse_angle(target)});
  auto sols = esch::solve_congruence_system(sys);
  esch::json out;
  if (sols.is_empty()) out = {{"kind", "empty"}};
  else if (sols.is_all_circle()) out = {{"kind", "all_circle"}};
  else {
    esch::json list = esch::json::array();
    for (const auto& z : sols.solutions) list.push_back(z.str());
    out = {{"kind", "finite"}, {"solutions", list}};
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_esch, m) {
  m.doc() = "exact classification and free-action certification for positively curved biquotients";

  py::register_exception<esch::error>(m, "EschError");

  m.def("classify_json", &classify_json, py::arg("space"));
  m.def("invariants_json", &invariants_json, py::arg("space"));
  m.def("diagram_json", &diagram_json, py::arg("space"));
  m.def("certify_free_json", &certify_free_json, py::arg("space"), py::arg("group") = "quaternion8",
        py::arg("side") = "right");
  m.def("verify_json", &verify_json, py::arg("suite"), py::arg("max_abs") = 40, py::arg("p_max") = 25,
        py::arg("q_max") = 25, py::arg("jobs") = 1);
  m.def("enumerate_canonical", &enumerate_py, py::arg("max_abs"), py::arg("shard_index") = 0,
        py::arg("shard_count") = 1);
  m.def("dirichlet_triples", &esch::dirichlet_triples, py::arg("modulus"), py::arg("count"));
  m.def("solve_congruences_json", &solve_congruences_json, py::arg("equations"));
  m.def("normalize", [](esch::i64 p1, esch::i64 p2, esch::i64 p3) {
    return esch::e2_normalize(esch::E2Params({p1, p2, p3})).p;
  });
  m.def("e2_is_free", [](esch::i64 p1, esch::i64 p2, esch::i64 p3) {
    return esch::e2_is_free(esch::E2Params({p1, p2, p3}));
  });
  m.def("e2_is_positively_curved", [](esch::i64 p1, esch::i64 p2, esch::i64 p3) {
    return esch::e2_is_positively_curved(esch::E2Params({p1, p2, p3}));
  });
}
