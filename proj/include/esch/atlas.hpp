#pragma once

#include <optional>
#include <string>
#include <utility>

#include "esch/spaces.hpp"

namespace esch {

// Symbolic isometry-group data.  Full groups are reported only where the
// classification asserts them; elsewhere full_group stays empty and
// full_group_open marks the gap.
struct IsometryDescriptor {
  std::string identity_component;
  int dimension = 0;
  int rank = 0;
  std::optional<std::string> full_group;
  std::optional<int> component_count;
  std::optional<i64> cohomogeneity;
  bool full_group_open = false;
  std::string note;
};

IsometryDescriptor isometry_descriptor(const SpaceParams& params);

// Cohomogeneity-one group diagram H c {K-, K+} c G.
struct CohomOneDiagram {
  std::string group;
  std::string principal_isotropy;
  std::string k_minus;
  std::string k_plus;
  std::pair<i64, i64> slope;  // circle slope of K+, always coprime
};

// E1 and B1 families only; not_cohomogeneity_one otherwise.
CohomOneDiagram group_diagram(const SpaceParams& params);

// Dimension of a symbolic group name built from the fixed grammar
// (products "x", semidirect "|x", quotients "/").  Used by tests to check the
// descriptor table against itself.
int symbolic_dimension(const std::string& name);

}  // namespace esch
