#pragma once

// vendored single-header nlohmann/json
#include "json.hpp"

#include "esch/atlas.hpp"
#include "esch/fixed_point.hpp"
#include "esch/groups.hpp"
#include "esch/invariants.hpp"
#include "esch/spaces.hpp"

namespace esch {

using json = nlohmann::json;

json to_json(const RationalAngle& a);
json to_json(const Su2Element& e);
json to_json(const IsometryTuple& t);
json to_json(const EschParams& p);
json to_json(const E2Params& p);
json to_json(const BazParams& p);
json to_json(const SpaceParams& p);
json to_json(const FamilyTag& tag);
json to_json(const AbstractDescriptor& d);
json to_json(const IsometryDescriptor& d);
json to_json(const CohomOneDiagram& d);
json to_json(const E2Invariants& inv);

// Certificate document: {space, group, verdict, witness?}
json certificate_json(const SpaceParams& space, const AbstractDescriptor& group,
                      const FreenessCertificate& cert);

// Parsers for the CLI literals: "p1,p2,p3", "a1,a2,a3/b1,b2,b3",
// "p1,p2,p3,p4,p5", "twisted-flag".
SpaceParams parse_space(const std::string& literal);
RationalAngle parse_angle(const std::string& literal);
Su2Element su2_from_json(const json& j);
IsometryTuple tuple_from_json(const json& j);

}  // namespace esch
