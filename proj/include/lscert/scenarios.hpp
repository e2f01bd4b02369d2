#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lscert/actions.hpp"
#include "lscert/report.hpp"
#include "lscert/zero_dim.hpp"

namespace lscert {

inline constexpr const char* kToolName = "lscert";
inline constexpr const char* kToolVersion = "0.1.0";

struct ScenarioParams {
  std::optional<std::size_t> horizon;
  std::optional<Rational> radius;
  std::optional<std::size_t> support_cap;
  std::optional<std::size_t> kmax;
  std::optional<double> tolerance;
  bool parallel = false;
};

struct ScenarioInfo {
  std::string name;
  std::string description;
};

std::vector<ScenarioInfo> list_scenarios();

// Executes the named built-in scenario. Unknown names and out-of-cap
// parameters raise "invalid-scenario".
Report run_scenario(const std::string& name, const ScenarioParams& params = {});

// The model actions behind the scenarios, shared with the test suites.
namespace builtin {

GroupAction<EuclideanModel> z2_plane_translation();
GroupAction<EuclideanModel> z_line_translation();
GroupAction<EuclideanModel> z_trivial_on_line();
GroupAction<EuclideanModel> reflection_on_line();
// Rotation of the unit-circumference circle by 7050/10000.
GroupAction<CircleModel> circle_rotation();
GroupAction<TriadicModel> flip_on_a(std::size_t support_cap);

}  // namespace builtin

}  // namespace lscert
