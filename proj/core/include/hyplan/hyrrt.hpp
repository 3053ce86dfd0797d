#pragma once

#include "hyplan/planner_common.hpp"
#include "hyplan/simulation.hpp"

#include <optional>

namespace hyplan {

struct HyrrtParams {
  double p = 0.5;               // probability of sampling x_rand from C'
  std::size_t K = 1000;         // iteration cap
  FlowParams flow;
  double tau_reach = 1e-2;      // Reached tolerance for extend
  int max_sampling_attempts = 100;

  void check() const;
};

enum class ExtendStatus { kReached, kAdvanced, kTrapped };

const char* to_string(ExtendStatus status);

enum class Regime { kFlow, kJump };

struct NewState {
  Vector state;
  SolutionPair edge;
  Vector input;  // flow input, or the jump input for a pure jump
};

/// Propagates once from (x, time). The regime is decided by C'/D'
/// membership, with a coin draw when x lies in both. A flow that reaches D
/// is followed by one jump. Returns nothing when the edge touches X_u or
/// x is in neither projection.
///
/// Draw order: coin (only if x in C' cap D'), input, flow duration, jump input.
std::optional<NewState> new_state(const Vector& x, HybridTime time, const HybridSystem& sys,
                                  const FlowParams& flow, RngStream& rng);

/// New vertex added by one extend call, if any.
struct ExtendResult {
  ExtendStatus status = ExtendStatus::kTrapped;
  std::optional<MotionId> added;
};

/// Selects the vertex nearest to x_rand within the regime's constraint set
/// and grows the tree from it.
ExtendResult extend(SearchTree& tree, const Vector& x_rand, const PlannerProblem& problem,
                    const HyrrtParams& params, RngStream& rng, Regime flag);

/// Algorithm loop: each iteration draws r, samples x_rand from C' (r <= p)
/// or D', and extends. Returns at the first vertex in X_f.
PlannerResult hyrrt_solve(const PlannerProblem& problem, const HyrrtParams& params, RngStream& rng);

}  // namespace hyplan
