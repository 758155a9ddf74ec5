// esch: exact classification, invariants and free-action certification for
// positively curved Eschenburg and Bazaikin biquotients.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "esch/search.hpp"

namespace {

using esch::json;

int emit_error(const esch::error& e) {
  const char* code = "input_error";
  int exit_code = 2;
  switch (e.code()) {
    case esch::errc::not_free: code = "not_free"; exit_code = 1; break;
    case esch::errc::not_positively_curved: code = "not_positively_curved"; exit_code = 1; break;
    case esch::errc::no_such_factor: code = "no_such_factor"; break;
    case esch::errc::no_match: code = "no_match"; break;
    case esch::errc::cap_exceeded: code = "cap_exceeded"; break;
    case esch::errc::overflow: code = "overflow"; break;
    default: break;
  }
  std::cout << json{{"error", code}, {"detail", e.what()}}.dump() << "\n";
  return exit_code;
}

esch::FiniteIsometryGroup load_group(const std::string& name_or_path, esch::Side side) {
  if (!name_or_path.empty() && (name_or_path[0] == '@' || name_or_path.find(".json") != std::string::npos)) {
    std::string path = name_or_path[0] == '@' ? name_or_path.substr(1) : name_or_path;
    std::ifstream in(path);
    if (!in) throw esch::error(esch::errc::parse_error, "cannot open generator file '" + path + "'");
    json j;
    in >> j;
    if (!j.is_array()) throw esch::error(esch::errc::parse_error, "generator file must hold a JSON array");
    std::vector<esch::IsometryTuple> gens;
    for (const auto& item : j) gens.push_back(esch::tuple_from_json(item));
    return esch::close_subgroup(gens);
  }
  return esch::embed_su2_group(esch::build_group_by_name(name_or_path), side);
}

void print_records_csv(const esch::VerifyReport& rep) {
  std::cout << "suite,record,json\n";
  for (size_t i = 0; i < rep.records.size(); ++i)
    std::cout << rep.suite << "," << i << "," << "\"" << rep.records[i].dump() << "\"\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact biquotient classification and free-action certification"};
  app.require_subcommand(1);

  std::string space_lit, group_name = "quaternion8", side_name = "right", suite, format = "json";
  long long max_abs = 40, p_max = 25, q_max = 25;
  long long shard_index = 0, shard_count = 1;
  int jobs = 1;
  if (const char* env = std::getenv("ESCH_JOBS")) jobs = std::max(1, std::atoi(env));

  auto* classify = app.add_subcommand("classify", "family, cohomogeneity and isometry descriptor");
  classify->add_option("--space", space_lit)->required();

  auto* invariants = app.add_subcommand("invariants", "H^4 order, Pontrjagin residue, vertex lens orders");
  invariants->add_option("--space", space_lit)->required();

  auto* diagram = app.add_subcommand("diagram", "cohomogeneity-one group diagram (E1 / B1)");
  diagram->add_option("--space", space_lit)->required();

  auto* certify = app.add_subcommand("certify-free", "freeness certificate for a finite isometry group");
  certify->add_option("--space", space_lit)->required();
  certify->add_option("--group", group_name, "catalog name, @file.json generators, or 'so3'");
  certify->add_option("--side", side_name)->check(CLI::IsMember({"left", "right"}));

  auto* enumerate = app.add_subcommand("enumerate", "canonical free positively curved E2 triples");
  enumerate->add_option("--max-abs", max_abs);
  enumerate->add_option("--shard-index", shard_index);
  enumerate->add_option("--shard-count", shard_count);
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "theorem-verification sweeps");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"so3-classification", "theorem-b", "dirichlet-f", "order-criterion-comparison",
                             "invariant-formulas"}));
  verify->add_option("--max-abs", max_abs);
  verify->add_option("--p-max", p_max);
  verify->add_option("--q-max", q_max);
  verify->add_option("--jobs", jobs);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", "usage"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (*classify) {
      auto space = esch::parse_space(space_lit);
      auto tag = esch::classify_family(space);
      json out = esch::to_json(tag);
      out["space"] = esch::to_json(space);
      try {
        out["isometry"] = esch::to_json(esch::isometry_descriptor(space));
      } catch (const esch::error& e) {
        if (e.code() != esch::errc::no_match) throw;
      }
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*invariants) {
      auto space = esch::parse_space(space_lit);
      const auto* e2 = std::get_if<esch::E2Params>(&space);
      if (!e2) throw esch::error(esch::errc::parse_error, "invariants need an E2 triple p1,p2,p3");
      std::cout << esch::to_json(esch::e2_invariants(*e2)).dump() << "\n";
      return 0;
    }
    if (*diagram) {
      std::cout << esch::to_json(esch::group_diagram(esch::parse_space(space_lit))).dump() << "\n";
      return 0;
    }
    if (*certify) {
      auto space = esch::parse_space(space_lit);
      if (!std::holds_alternative<esch::E2Params>(space) && !std::holds_alternative<esch::EschParams>(space))
        throw esch::error(esch::errc::parse_error, "certify-free needs Eschenburg-type parameters");
      esch::EschParams esch_space = std::holds_alternative<esch::E2Params>(space)
                                        ? std::get<esch::E2Params>(space).as_esch()
                                        : std::get<esch::EschParams>(space);
      esch::Side side = side_name == "left" ? esch::Side::Left : esch::Side::Right;
      if (group_name == "so3" || group_name == "su2") {
        auto cert = esch::so3_factor_is_free(esch_space, side);
        json out{{"space", esch::to_json(space)},
                 {"group", std::string(group_name == "so3" ? "so3" : "su2") + "-factor:" + side_name},
                 {"verdict", cert.verdict == esch::Verdict::Free ? "free" : "not_free"}};
        if (cert.witness) {
          out["witness"] = {{"z", cert.witness->z.str()},
                            {"lambda", cert.witness->free_eigen->str()},
                            {"bijection", cert.witness->bijection},
                            {"element", esch::to_json(cert.witness->element)}};
        }
        std::cout << out.dump() << "\n";
        return cert.verdict == esch::Verdict::Free ? 0 : 1;
      }
      auto group = load_group(group_name, side);
      auto cert = esch::action_is_free(esch_space, group);
      auto eff = esch::effective_abstract_type(esch_space, group);
      json out = esch::certificate_json(space, eff, cert);
      std::cout << out.dump() << "\n";
      return cert.verdict == esch::Verdict::Free ? 0 : 1;
    }
    if (*enumerate) {
      esch::SweepConfig cfg;
      cfg.max_abs = max_abs;
      cfg.shard = {shard_index, shard_count};
      if (cfg.shard.index < 0 || cfg.shard.index >= cfg.shard.count)
        throw esch::error(esch::errc::parse_error, "shard index must lie below shard count");
      auto triples = esch::enumerate_canonical(cfg);
      if (format == "csv") {
        std::cout << "p1,p2,p3\n";
        for (const auto& t : triples) std::cout << t.p[0] << "," << t.p[1] << "," << t.p[2] << "\n";
      } else {
        for (const auto& t : triples) std::cout << esch::to_json(t).dump() << "\n";
      }
      return 0;
    }
    if (*verify) {
      esch::VerifyOptions opt;
      opt.max_abs = max_abs;
      opt.p_max = p_max;
      opt.q_max = q_max;
      opt.jobs = jobs;
      auto rep = esch::verify_theorems(suite, opt);
      if (format == "csv") {
        print_records_csv(rep);
      } else {
        for (const auto& r : rep.records) std::cout << r.dump() << "\n";
        std::cout << rep.summary.dump() << "\n";
      }
      std::cerr << "suite " << rep.suite << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
      return rep.pass ? 0 : 1;
    }
  } catch (const esch::error& e) {
    return emit_error(e);
  } catch (const std::exception& e) {
    std::cout << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
