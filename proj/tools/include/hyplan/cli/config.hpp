#pragma once

#include "hyplan/hysst.hpp"
#include "hyplan/planner_common.hpp"
#include "hyplan/systems/bouncing_ball.hpp"
#include "hyplan/systems/multicopter.hpp"
#include "hyplan/systems/pinball.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyplan::cli {

/// Malformed or invalid run configuration. The message starts with
/// "<source>:<line>: " when the offending node has a position.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PlannerKind { kHyrrt, kHysst };

const char* to_string(PlannerKind kind);

enum class CostKind { kHybridTime, kNegativeXTravel };

/// Minus the distance travelled along x over the edge samples.
double negative_x_travel(const SolutionPair& edge);

struct RunConfig {
  std::string system_name;
  BouncingBallConfig bouncing_ball;
  PinballConfig pinball;
  MulticopterConfig multicopter;

  PlannerKind planner = PlannerKind::kHyrrt;
  HysstParams params;  // HyRRT reads the shared fields only
  CostKind cost = CostKind::kHybridTime;

  std::vector<Vector> initial_states;
  Box goal;  // open sides are +-inf
  std::uint64_t seed = 1;
  std::string output_dir = "out";
};

/// A `section.key=value` or `key=value` assignment applied before parsing;
/// a bare key refers to the planner section.
using Override = std::pair<std::string, std::string>;

RunConfig parse_config(const std::string& text, const std::string& source = "<config>",
                       const std::vector<Override>& overrides = {});

RunConfig load_config(const std::string& path, const std::vector<Override>& overrides = {});

HybridSystem make_system(const RunConfig& cfg);

PlannerProblem make_problem(const RunConfig& cfg);

}  // namespace hyplan::cli
