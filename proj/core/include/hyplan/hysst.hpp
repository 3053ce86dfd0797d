#pragma once

#include "hyplan/hyrrt.hpp"

#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

namespace hyplan {

using EdgeCost = std::function<double(const SolutionPair& edge)>;

struct HysstParams : HyrrtParams {
  double eps_bn = 0.1;        // selection radius
  double eps_s = 0.05;        // pruning radius
  std::size_t batch_size = 1;
  EdgeCost cost = hybrid_time_cost;
  /// Check witness sparsity, representative dominance and referential
  /// integrity while solving; failures are counted in
  /// stats.invariant_violations.
  bool instrumented = false;

  void check() const;
};

struct Witness {
  Vector state;
  std::optional<MotionId> rep;
};

using WitnessSet = std::vector<Witness>;

/// Lowest acc_cost among active motions within eps_bn of x_rand that satisfy
/// `constraint` (ties: lowest id). With an empty ball, the nearest such
/// motion. Throws kNoActiveVertex when no motion qualifies.
MotionId best_near_selection(const SearchTree& tree, const Vector& x_rand, double eps_bn,
                             const DistanceFn& distance, const MotionPredicate& constraint = {});

struct LocalityResult {
  bool best = false;
  std::size_t witness = 0;
};

/// When no witness lies within eps_s of x, appends one at x (no rep yet) and
/// reports true. Otherwise compares against the nearest witness's rep:
/// true only when `cost` is strictly lower.
LocalityResult is_vertex_locally_the_best(const Vector& x, double cost, WitnessSet& witnesses, double eps_s,
                                          const DistanceFn& distance, const SearchTree& tree);

/// Makes v_new the rep of `witness`, deactivates the previous rep and
/// deletes inactive leaves upward from it. Motions in `pinned` are never
/// deactivated.
void prune_dominated_vertices(MotionId v_new, std::size_t witness, WitnessSet& witnesses, SearchTree& tree,
                              const std::unordered_set<MotionId>& pinned = {});

struct HysstResult : PlannerResult {
  WitnessSet witnesses;
  std::vector<MotionId> solutions;
};

/// Stops after `batch_size` goal vertices or K iterations and returns the
/// cheapest solution found.
HysstResult hysst_solve(const PlannerProblem& problem, const HysstParams& params, RngStream& rng);

}  // namespace hyplan
