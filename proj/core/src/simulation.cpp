#include "hyplan/simulation.hpp"

#include "hyplan/error.hpp"
#include "hyplan/integrator.hpp"

#include <cmath>
#include <string>

namespace hyplan {

namespace {
// Relative slack when splitting a duration into whole steps.
constexpr double kStepSlack = 1e-9;
}  // namespace

void FlowParams::check() const {
  if (!(max_flow_time > 0.0)) throw Error(ErrorCode::kInvalidArgument, "max_flow_time must be positive");
  if (!(flow_step > 0.0) || flow_step > max_flow_time) {
    throw Error(ErrorCode::kInvalidArgument, "flow_step must satisfy 0 < flow_step <= max_flow_time");
  }
}

const char* to_string(TerminalReason reason) {
  switch (reason) {
    case TerminalReason::kMaxTimeReached: return "MaxTimeReached";
    case TerminalReason::kHitJumpSet: return "HitJumpSet";
    case TerminalReason::kHitUnsafeSet: return "HitUnsafeSet";
  }
  return "Unknown";
}

PropagationResult continuous_simulate(const HybridSystem& sys, const Vector& x0, const Vector& u,
                                      double duration, const FlowParams& params,
                                      const FlowOptions& options) {
  params.check();
  if (!(duration > 0.0) || duration > params.max_flow_time * (1.0 + kStepSlack)) {
    throw Error(ErrorCode::kInvalidDuration,
                "duration " + std::to_string(duration) + " outside (0, " + std::to_string(params.max_flow_time) + "]");
  }
  if (!sys.in_flow_set(x0, u)) {
    throw Error(ErrorCode::kStartNotInFlowSet, "initial state is not in the flow set");
  }

  const double step = params.flow_step;
  auto full_steps = static_cast<long>(std::floor(duration / step + kStepSlack));
  double remainder = duration - static_cast<double>(full_steps) * step;
  if (remainder <= kStepSlack * step) remainder = 0.0;

  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(full_steps) + 2);
  samples.push_back({options.start, x0, u});

  PropagationResult result;
  auto finish = [&](TerminalReason reason) {
    result.reason = reason;
    result.terminal_state = samples.back().state;
    result.segment = SolutionPair(std::move(samples));
    return result;
  };

  if (sys.in_unsafe_set(x0, u)) return finish(TerminalReason::kHitUnsafeSet);

  const long total_steps = full_steps + (remainder > 0.0 ? 1 : 0);
  Vector x = x0;
  for (long k = 1; k <= total_steps; ++k) {
    const bool partial = k > full_steps;
    const double dt = partial ? remainder : step;
    x = rk4_step(sys.flow_map, x, u, dt);
    const double t = partial ? options.start.t + duration : options.start.t + static_cast<double>(k) * step;
    samples.push_back({{t, options.start.j}, x, u});
    if (sys.in_unsafe_set(x, u)) return finish(TerminalReason::kHitUnsafeSet);
    if (options.stop_at_jump_set && sys.in_jump_set(x, u)) return finish(TerminalReason::kHitJumpSet);
  }
  return finish(TerminalReason::kMaxTimeReached);
}

Vector discrete_simulate(const HybridSystem& sys, const Vector& x, const Vector& u) {
  if (!sys.in_jump_set(x, u)) {
    throw Error(ErrorCode::kStateNotInJumpSet, "state is not in the jump set");
  }
  return sys.jump_map(x, u);
}

CollisionResult collision_check(const SolutionPair& segment, const HybridSystem& sys) {
  const auto& s = segment.samples();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (sys.in_jump_set(s[k].state, s[k].input)) {
      std::vector<Sample> head(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k + 1));
      return {true, SolutionPair(std::move(head))};
    }
  }
  return {false, segment};
}

}  // namespace hyplan
