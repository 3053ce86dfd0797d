#include "hyplan/planner_common.hpp"

#include "hyplan/error.hpp"

#include <limits>

namespace hyplan {

namespace {
constexpr double kInitialStateTolerance = 1e-9;
}  // namespace

double euclidean_distance(const Vector& a, const Vector& b) { return (a - b).norm(); }

void PlannerProblem::check() const {
  system.check();
  if (initial_states.empty()) throw Error(ErrorCode::kEmptyInitialSet, "no initial states");
  if (!in_goal) throw Error(ErrorCode::kInvalidArgument, "goal predicate is not set");
  if (!distance) throw Error(ErrorCode::kInvalidArgument, "distance function is not set");
}

const char* to_string(PlanStatus status) {
  return status == PlanStatus::kSolved ? "Solved" : "NoPlanFound";
}

SearchTree init_tree(const HybridSystem& sys, const std::vector<Vector>& initial_states) {
  if (initial_states.empty()) throw Error(ErrorCode::kEmptyInitialSet, "no initial states");
  SearchTree tree;
  for (const auto& x : initial_states) {
    if (x.size() != sys.state_dim || !box_contains(sys.state_bounds, x)) {
      throw Error(ErrorCode::kStateOutOfBounds, "initial state lies outside the state bounds");
    }
    tree.add_root(x);
  }
  return tree;
}

Vector random_state(const StatePredicate& region, const Box& bounds, RngStream& rng, int max_attempts,
                    const StateSampler& fallback) {
  if (max_attempts < 1) throw Error(ErrorCode::kInvalidArgument, "max_attempts must be at least 1");
  Vector x(static_cast<Eigen::Index>(bounds.size()));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      x[static_cast<Eigen::Index>(i)] = rng.uniform(bounds[i].min, bounds[i].max);
    }
    if (region(x)) return x;
  }
  if (fallback) return fallback(rng);
  throw Error(ErrorCode::kSamplingExhausted,
              "no sample hit the region in " + std::to_string(max_attempts) + " attempts");
}

Vector random_input(const Box& bounds, RngStream& rng) {
  Vector u(static_cast<Eigen::Index>(bounds.size()));
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    u[static_cast<Eigen::Index>(i)] = rng.uniform(bounds[i].min, bounds[i].max);
  }
  return u;
}

MotionId nearest_neighbor(const SearchTree& tree, const Vector& x, const DistanceFn& distance,
                          const MotionPredicate& constraint) {
  std::optional<MotionId> best;
  double best_distance = std::numeric_limits<double>::infinity();
  tree.for_each([&](const Motion& m) {
    if (m.inactive || (constraint && !constraint(m))) return;
    const double d = distance(m.state, x);
    if (!best || d < best_distance) {
      best = m.id;
      best_distance = d;
    }
  });
  if (!best) throw Error(ErrorCode::kNoQualifyingVertex, "no vertex satisfies the constraint");
  return *best;
}

MotionId nearest_neighbor(const SearchTree& tree, const Vector& x, const DistanceFn& distance,
                          const StatePredicate& constraint) {
  if (!constraint) return nearest_neighbor(tree, x, distance, MotionPredicate{});
  return nearest_neighbor(tree, x, distance, MotionPredicate([&](const Motion& m) { return constraint(m.state); }));
}

SolutionPair extract_path(const SearchTree& tree, MotionId id, const HybridSystem& sys) {
  const auto path = tree.path_to(id);
  const Motion& root = tree.at(path.front());
  SolutionPair plan({Sample{{0.0, 0}, root.state, Vector::Zero(sys.input_dim)}});
  for (std::size_t k = 1; k < path.size(); ++k) {
    plan = concatenate(plan, tree.at(path[k]).edge.rebased());
  }
  std::vector<std::size_t> starts = plan.edge_starts();
  std::vector<Sample> samples = std::move(plan).release();
  samples.back().input = Vector::Zero(sys.input_dim);
  return SolutionPair(std::move(samples), std::move(starts));
}

double hybrid_time_cost(const SolutionPair& edge) {
  if (edge.empty()) return 0.0;
  return (edge.back().time.t - edge.front().time.t) + static_cast<double>(edge.back().time.j - edge.front().time.j);
}

std::string MotionPlanCheck::describe() const {
  std::string out;
  auto line = [&out](const char* name, bool ok) {
    out += name;
    out += ok ? ": ok\n" : ": FAILED\n";
  };
  line("initial state in X_0", initial_ok);
  line("solution pair", solution_ok);
  line("final state in X_f", goal_ok);
  line("avoids X_u", unsafe_ok);
  if (!solution_ok) out += format_report(report);
  return out;
}

MotionPlanCheck check_motion_plan(const SolutionPair& plan, const PlannerProblem& problem,
                                  const ValidationTolerances& tol) {
  MotionPlanCheck check;
  check.report = validate_solution_pair(plan, problem.system, tol);
  check.solution_ok = check.report.passed();
  if (plan.empty()) return check;

  const Vector& x0 = plan.front().state;
  for (const auto& candidate : problem.initial_states) {
    if (candidate.size() == x0.size() && (candidate - x0).cwiseAbs().maxCoeff() <= kInitialStateTolerance) {
      check.initial_ok = true;
      break;
    }
  }
  check.goal_ok = problem.in_goal(plan.back().state);
  check.unsafe_ok = true;
  for (const auto& s : plan.samples()) {
    if (problem.system.in_unsafe_set(s.state, s.input)) {
      check.unsafe_ok = false;
      break;
    }
  }
  return check;
}

}  // namespace hyplan
