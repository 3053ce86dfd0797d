#pragma once

#include "hyplan/hybrid_system.hpp"
#include "hyplan/solution_pair.hpp"

namespace hyplan {

/// Flow propagation settings: edges flow for at most `max_flow_time`
/// seconds, integrated with fixed steps of `flow_step` seconds.
struct FlowParams {
  double max_flow_time = 1.0;
  double flow_step = 0.01;

  void check() const;
};

enum class TerminalReason { kMaxTimeReached, kHitJumpSet, kHitUnsafeSet };

const char* to_string(TerminalReason reason);

struct PropagationResult {
  SolutionPair segment;
  Vector terminal_state;
  TerminalReason reason = TerminalReason::kMaxTimeReached;
};

struct FlowOptions {
  HybridTime start{};           // hybrid time of x0
  bool stop_at_jump_set = true; // false: only unsafe samples end the flow early
};

/// Integrates x' = f(x, u) from x0 with fixed-step RK4 and u held constant.
///
/// Takes floor(duration / flow_step) full steps plus one shorter step for
/// any remainder. Each new sample is checked against X_u, then D; the
/// first hit ends the segment with kHitUnsafeSet or kHitJumpSet. x0 itself
/// is checked against X_u only, so a flow may leave C cap D.
PropagationResult continuous_simulate(const HybridSystem& sys, const Vector& x0, const Vector& u,
                                      double duration, const FlowParams& params,
                                      const FlowOptions& options = {});

/// g(x, u). Throws kStateNotInJumpSet unless (x, u) in D.
Vector discrete_simulate(const HybridSystem& sys, const Vector& x, const Vector& u);

struct CollisionResult {
  bool collided = false;
  SolutionPair truncated;
};

/// Point-by-point jump-set check: truncates the segment at (and including)
/// the first sample in D.
CollisionResult collision_check(const SolutionPair& segment, const HybridSystem& sys);

}  // namespace hyplan
