#pragma once

#include "hyplan/hybrid_system.hpp"
#include "hyplan/rng.hpp"
#include "hyplan/search_tree.hpp"
#include "hyplan/solution_pair.hpp"
#include "hyplan/validation.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hyplan {

using StatePredicate = std::function<bool(const Vector& x)>;
using MotionPredicate = std::function<bool(const Motion& m)>;
using DistanceFn = std::function<double(const Vector& a, const Vector& b)>;

double euclidean_distance(const Vector& a, const Vector& b);

/// P = (X_0, X_f, X_u, H). X_u is the system's unsafe set.
struct PlannerProblem {
  HybridSystem system;
  std::vector<Vector> initial_states;
  StatePredicate in_goal;
  DistanceFn distance = euclidean_distance;
  // Optional X_c / X_d restrictions for vertex selection; empty means none.
  StatePredicate flow_constraint;
  StatePredicate jump_constraint;

  void check() const;
};

enum class PlanStatus { kSolved, kNoPlanFound };

const char* to_string(PlanStatus status);

struct PlannerStats {
  std::size_t iterations = 0;
  std::size_t flow_iterations = 0;  // iterations that sampled x_rand from C'
  std::size_t jump_iterations = 0;
  std::size_t vertex_count = 0;
  std::size_t witness_count = 0;
  std::size_t solution_count = 0;
  std::size_t invariant_violations = 0;
};

struct PlannerResult {
  PlanStatus status = PlanStatus::kNoPlanFound;
  std::optional<SolutionPair> plan;
  std::optional<MotionId> goal_vertex;
  double cost = 0.0;
  PlannerStats stats;
  SearchTree tree;

  bool solved() const { return status == PlanStatus::kSolved; }
};

/// One root per state at hybrid time (0, 0).
/// Throws kEmptyInitialSet, or kStateOutOfBounds for a state outside
/// `sys.state_bounds` or of the wrong size.
SearchTree init_tree(const HybridSystem& sys, const std::vector<Vector>& initial_states);

/// Rejection sampling over `bounds` until `region` holds. After
/// `max_attempts` misses, `fallback` is used if set; otherwise throws
/// kSamplingExhausted.
Vector random_state(const StatePredicate& region, const Box& bounds, RngStream& rng, int max_attempts,
                    const StateSampler& fallback = {});

/// Uniform draw per dimension; one draw per dimension even when degenerate.
Vector random_input(const Box& bounds, RngStream& rng);

/// Argmin of distance(m.state, x) over live, active motions accepted by
/// `constraint`. Ties go to the lowest id. Throws kNoQualifyingVertex.
MotionId nearest_neighbor(const SearchTree& tree, const Vector& x, const DistanceFn& distance,
                          const MotionPredicate& constraint = {});

MotionId nearest_neighbor(const SearchTree& tree, const Vector& x, const DistanceFn& distance,
                          const StatePredicate& constraint);

/// Root-to-`id` concatenation of edges, starting at (0, 0). The last sample
/// carries a zero input.
SolutionPair extract_path(const SearchTree& tree, MotionId id, const HybridSystem& sys);

/// Δt + Δj of an edge.
double hybrid_time_cost(const SolutionPair& edge);

/// Outcome of checking a plan against the four motion-plan conditions.
struct MotionPlanCheck {
  bool initial_ok = false;  // starts in X_0 (within 1e-9)
  bool solution_ok = false; // passes validate_solution_pair
  bool goal_ok = false;     // ends in X_f
  bool unsafe_ok = false;   // no sample in X_u
  ValidationReport report;

  bool passed() const { return initial_ok && solution_ok && goal_ok && unsafe_ok; }
  std::string describe() const;
};

MotionPlanCheck check_motion_plan(const SolutionPair& plan, const PlannerProblem& problem,
                                  const ValidationTolerances& tol = {});

}  // namespace hyplan
