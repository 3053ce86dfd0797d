#include "hyplan/hysst.hpp"

#include "hyplan/error.hpp"

#include <limits>

namespace hyplan {

void HysstParams::check() const {
  HyrrtParams::check();
  if (!(eps_bn >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "eps_bn must be nonnegative");
  if (!(eps_s >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "eps_s must be nonnegative");
  if (batch_size < 1) throw Error(ErrorCode::kInvalidArgument, "batch_size must be at least 1");
  if (!cost) throw Error(ErrorCode::kInvalidArgument, "cost functional is not set");
}

MotionId best_near_selection(const SearchTree& tree, const Vector& x_rand, double eps_bn,
                             const DistanceFn& distance, const MotionPredicate& constraint) {
  std::optional<MotionId> in_ball, nearest;
  double best_cost = std::numeric_limits<double>::infinity();
  double best_distance = std::numeric_limits<double>::infinity();
  tree.for_each([&](const Motion& m) {
    if (m.inactive || (constraint && !constraint(m))) return;
    const double d = distance(m.state, x_rand);
    if (d <= eps_bn && (!in_ball || m.acc_cost < best_cost)) {
      in_ball = m.id;
      best_cost = m.acc_cost;
    }
    if (!nearest || d < best_distance) {
      nearest = m.id;
      best_distance = d;
    }
  });
  if (in_ball) return *in_ball;
  if (nearest) return *nearest;
  throw Error(ErrorCode::kNoActiveVertex, "no active vertex qualifies");
}

LocalityResult is_vertex_locally_the_best(const Vector& x, double cost, WitnessSet& witnesses, double eps_s,
                                          const DistanceFn& distance, const SearchTree& tree) {
  std::optional<std::size_t> nearest;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const double d = distance(witnesses[i].state, x);
    if (d < best_distance) {
      nearest = i;
      best_distance = d;
    }
  }
  if (!nearest || best_distance > eps_s) {
    witnesses.push_back({x, std::nullopt});
    return {true, witnesses.size() - 1};
  }
  const Witness& w = witnesses[*nearest];
  if (!w.rep || !tree.contains(*w.rep)) return {true, *nearest};
  return {cost < tree.at(*w.rep).acc_cost, *nearest};
}

void prune_dominated_vertices(MotionId v_new, std::size_t witness, WitnessSet& witnesses, SearchTree& tree,
                              const std::unordered_set<MotionId>& pinned) {
  Witness& w = witnesses.at(witness);
  const std::optional<MotionId> old = w.rep;
  w.rep = v_new;
  if (!old || *old == v_new || !tree.contains(*old) || pinned.count(*old)) return;

  tree.at(*old).inactive = true;
  std::optional<MotionId> cur = old;
  while (cur && tree.contains(*cur)) {
    const Motion& m = tree.at(*cur);
    if (!m.inactive || m.num_children != 0) break;
    const std::optional<MotionId> parent = m.parent;
    tree.remove(*cur);
    cur = parent;
  }
}

namespace {

// Every rep resolves to a live, active motion; the tree is consistent.
bool referentially_intact(const SearchTree& tree, const WitnessSet& witnesses) {
  for (const auto& w : witnesses) {
    if (w.rep && (!tree.contains(*w.rep) || tree.at(*w.rep).inactive)) return false;
  }
  return tree.check_invariants();
}

}  // namespace

HysstResult hysst_solve(const PlannerProblem& problem, const HysstParams& params, RngStream& rng) {
  problem.check();
  params.check();
  const HybridSystem& sys = problem.system;
  const DistanceFn& distance = problem.distance;

  HysstResult result;
  result.tree = init_tree(sys, problem.initial_states);
  SearchTree& tree = result.tree;
  WitnessSet& witnesses = result.witnesses;
  std::unordered_set<MotionId> pinned;
  std::size_t& violations = result.stats.invariant_violations;

  auto record_if_goal = [&](MotionId id) {
    if (tree.contains(id) && !tree.at(id).inactive && problem.in_goal(tree.at(id).state)) {
      result.solutions.push_back(id);
      pinned.insert(id);
    }
  };

  auto admit = [&](const Vector& x, double cost, const std::function<MotionId()>& add) -> std::optional<MotionId> {
    const std::size_t before = witnesses.size();
    const LocalityResult local = is_vertex_locally_the_best(x, cost, witnesses, params.eps_s, distance, tree);
    if (!local.best) return std::nullopt;
    if (params.instrumented) {
      if (witnesses.size() > before) {
        for (std::size_t i = 0; i + 1 < witnesses.size(); ++i) {
          if (!(distance(witnesses[i].state, witnesses.back().state) > params.eps_s)) ++violations;
        }
      } else {
        const Witness& w = witnesses[local.witness];
        if (w.rep && tree.contains(*w.rep) && !(cost < tree.at(*w.rep).acc_cost)) ++violations;
      }
    }
    const MotionId id = add();
    prune_dominated_vertices(id, local.witness, witnesses, tree, pinned);
    if (params.instrumented && !referentially_intact(tree, witnesses)) ++violations;
    return id;
  };

  // Roots compete for witnesses with zero cost; a losing root stays active.
  const std::vector<MotionId> roots = tree.roots();
  for (MotionId root : roots) {
    const Vector x = tree.at(root).state;
    admit(x, 0.0, [root] { return root; });
  }
  for (MotionId root : tree.roots()) record_if_goal(root);

  auto in_c = [&](const Vector& x) {
    return in_flow_projection(sys, x) && (!problem.flow_constraint || problem.flow_constraint(x));
  };
  auto in_d = [&](const Vector& x) {
    return in_jump_projection(sys, x) && (!problem.jump_constraint || problem.jump_constraint(x));
  };

  for (std::size_t k = 1; k <= params.K && result.solutions.size() < params.batch_size; ++k) {
    result.stats.iterations = k;
    const Regime flag = rng.uniform01() <= params.p ? Regime::kFlow : Regime::kJump;
    ++(flag == Regime::kFlow ? result.stats.flow_iterations : result.stats.jump_iterations);
    Vector x_rand;
    try {
      x_rand = flag == Regime::kFlow
                   ? random_state(in_c, sys.state_bounds, rng, params.max_sampling_attempts)
                   : random_state(in_d, sys.state_bounds, rng, params.max_sampling_attempts, sys.jump_set_sampler);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSamplingExhausted) throw;
      continue;
    }

    MotionPredicate constraint = [&](const Motion& m) {
      return flag == Regime::kFlow ? in_c(m.state) : in_d(m.state);
    };
    MotionId cur = 0;
    try {
      cur = best_near_selection(tree, x_rand, params.eps_bn, distance, constraint);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoActiveVertex) throw;
      continue;
    }

    const Motion& v_cur = tree.at(cur);
    auto next = new_state(v_cur.state, v_cur.time, sys, params.flow, rng);
    if (!next) continue;

    const double cost = v_cur.acc_cost + params.cost(next->edge);
    auto added = admit(next->state, cost, [&] {
      const MotionId id = tree.add_vertex(next->state, next->edge.back().time, cost);
      tree.add_edge(cur, id, std::move(next->edge), std::move(next->input));
      return id;
    });
    if (added) record_if_goal(*added);
  }

  result.stats.vertex_count = tree.size();
  result.stats.witness_count = witnesses.size();
  result.stats.solution_count = result.solutions.size();
  if (!result.solutions.empty()) {
    MotionId best = result.solutions.front();
    for (MotionId id : result.solutions) {
      const double c = tree.at(id).acc_cost;
      if (c < tree.at(best).acc_cost || (c == tree.at(best).acc_cost && id < best)) best = id;
    }
    result.status = PlanStatus::kSolved;
    result.goal_vertex = best;
    result.cost = tree.at(best).acc_cost;
    result.plan = extract_path(tree, best, sys);
  }
  return result;
}

}  // namespace hyplan
