#include "hyplan/hyrrt.hpp"

#include "hyplan/error.hpp"

#include <cmath>

namespace hyplan {

void HyrrtParams::check() const {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::kInvalidArgument, "p must lie in (0, 1)");
  if (K < 1) throw Error(ErrorCode::kInvalidArgument, "K must be at least 1");
  if (!(tau_reach >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "tau_reach must be nonnegative");
  if (max_sampling_attempts < 1) throw Error(ErrorCode::kInvalidArgument, "max_sampling_attempts must be at least 1");
  flow.check();
}

const char* to_string(ExtendStatus status) {
  switch (status) {
    case ExtendStatus::kReached: return "Reached";
    case ExtendStatus::kAdvanced: return "Advanced";
    case ExtendStatus::kTrapped: return "Trapped";
  }
  return "Unknown";
}

namespace {

// Duration in (0, Tm], rounded up to a whole number of flow steps.
double draw_duration(const FlowParams& flow, RngStream& rng) {
  const double raw = rng.uniform_positive(flow.max_flow_time);
  const double steps = std::max(1.0, std::ceil(raw / flow.flow_step - 1e-9));
  return std::min(steps * flow.flow_step, flow.max_flow_time);
}

std::optional<NewState> jump_from(const Sample& pre, const HybridSystem& sys, std::vector<Sample> samples,
                                  const Vector& u_jump) {
  if (!sys.in_jump_set(pre.state, u_jump)) return std::nullopt;
  Vector x_plus = sys.jump_map(pre.state, u_jump);
  const Vector zero = Vector::Zero(sys.input_dim);
  if (sys.in_unsafe_set(x_plus, zero)) return std::nullopt;
  samples.back().input = u_jump;
  samples.push_back({{pre.time.t, pre.time.j + 1}, x_plus, zero});
  NewState out;
  out.state = std::move(x_plus);
  out.edge = SolutionPair(std::move(samples));
  return out;
}

}  // namespace

std::optional<NewState> new_state(const Vector& x, HybridTime time, const HybridSystem& sys,
                                  const FlowParams& flow, RngStream& rng) {
  const bool in_c = in_flow_projection(sys, x);
  const bool in_d = in_jump_projection(sys, x);
  if (!in_c && !in_d) return std::nullopt;
  Regime regime = in_c ? Regime::kFlow : Regime::kJump;
  if (in_c && in_d) regime = rng.uniform01() < 0.5 ? Regime::kFlow : Regime::kJump;

  if (regime == Regime::kJump) {
    Vector u = random_input(sys.jump_input_bounds, rng);
    auto out = jump_from({time, x, u}, sys, {Sample{time, x, u}}, u);
    if (out) out->input = std::move(u);
    return out;
  }

  Vector u = random_input(sys.flow_input_bounds, rng);
  if (!sys.in_flow_set(x, u)) return std::nullopt;
  const double duration = draw_duration(flow, rng);
  PropagationResult prop = continuous_simulate(sys, x, u, duration, flow, {time, true});
  if (prop.reason == TerminalReason::kHitUnsafeSet) return std::nullopt;
  if (prop.segment.size() < 2) return std::nullopt;

  if (prop.reason == TerminalReason::kHitJumpSet) {
    Vector u_jump = random_input(sys.jump_input_bounds, rng);
    const Sample pre = prop.segment.back();
    auto out = jump_from(pre, sys, std::move(prop.segment).release(), u_jump);
    if (out) out->input = std::move(u);
    return out;
  }

  NewState out;
  out.state = prop.terminal_state;
  out.edge = std::move(prop.segment);
  out.input = std::move(u);
  return out;
}

ExtendResult extend(SearchTree& tree, const Vector& x_rand, const PlannerProblem& problem,
                    const HyrrtParams& params, RngStream& rng, Regime flag) {
  const HybridSystem& sys = problem.system;
  MotionPredicate constraint;
  if (flag == Regime::kFlow) {
    constraint = [&](const Motion& m) {
      return in_flow_projection(sys, m.state) && (!problem.flow_constraint || problem.flow_constraint(m.state));
    };
  } else {
    constraint = [&](const Motion& m) {
      return in_jump_projection(sys, m.state) && (!problem.jump_constraint || problem.jump_constraint(m.state));
    };
  }

  MotionId cur = 0;
  try {
    cur = nearest_neighbor(tree, x_rand, problem.distance, constraint);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoQualifyingVertex) throw;
    return {};
  }

  const Motion& v_cur = tree.at(cur);
  auto next = new_state(v_cur.state, v_cur.time, sys, params.flow, rng);
  if (!next) return {};

  const HybridTime end = next->edge.back().time;
  const MotionId id = tree.add_vertex(next->state, end);
  tree.add_edge(cur, id, std::move(next->edge), std::move(next->input));
  const bool reached = problem.distance(tree.at(id).state, x_rand) <= params.tau_reach;
  return {reached ? ExtendStatus::kReached : ExtendStatus::kAdvanced, id};
}

PlannerResult hyrrt_solve(const PlannerProblem& problem, const HyrrtParams& params, RngStream& rng) {
  problem.check();
  params.check();
  const HybridSystem& sys = problem.system;

  PlannerResult result;
  result.tree = init_tree(sys, problem.initial_states);
  auto finish = [&](std::optional<MotionId> goal) {
    result.stats.vertex_count = result.tree.size();
    if (goal) {
      result.status = PlanStatus::kSolved;
      result.goal_vertex = goal;
      result.plan = extract_path(result.tree, *goal, sys);
      const HybridTime end = result.plan->back().time;
      result.cost = end.t + static_cast<double>(end.j);
      result.stats.solution_count = 1;
    }
    return std::move(result);
  };

  for (MotionId root : result.tree.roots()) {
    if (problem.in_goal(result.tree.at(root).state)) return finish(root);
  }

  auto in_c = [&](const Vector& x) {
    return in_flow_projection(sys, x) && (!problem.flow_constraint || problem.flow_constraint(x));
  };
  auto in_d = [&](const Vector& x) {
    return in_jump_projection(sys, x) && (!problem.jump_constraint || problem.jump_constraint(x));
  };

  for (std::size_t k = 1; k <= params.K; ++k) {
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
    const ExtendResult ext = extend(result.tree, x_rand, problem, params, rng, flag);
    if (ext.added && problem.in_goal(result.tree.at(*ext.added).state)) return finish(ext.added);
  }
  return finish(std::nullopt);
}

}  // namespace hyplan
