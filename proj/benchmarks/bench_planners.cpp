#include "hyplan/hyrrt.hpp"
#include "hyplan/hysst.hpp"
#include "hyplan/systems/bouncing_ball.hpp"
#include "hyplan/systems/pinball.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

using namespace hyplan;

PlannerProblem bouncing_ball_problem() {
  PlannerProblem problem;
  problem.system = make_bouncing_ball();
  Vector x0(2);
  x0 << 1.0, 0.0;
  problem.initial_states = {x0};
  problem.in_goal = [](const Vector& x) { return x[0] >= 0.55 && x[0] <= 0.64 && std::abs(x[1]) <= 0.5; };
  return problem;
}

PlannerProblem pinball_problem() {
  PlannerProblem problem;
  problem.system = make_pinball();
  problem.initial_states = pinball_initial_states();
  problem.in_goal = [](const Vector& x) { return x[0] >= 1.0 && x[0] <= 4.0 && x[1] >= -10.2 && x[1] <= -9.8; };
  return problem;
}

void BM_HyrrtBouncingBall(benchmark::State& state) {
  const PlannerProblem problem = bouncing_ball_problem();
  HyrrtParams params;
  params.K = 20000;
  params.flow = {0.5, 0.001};
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RngStream rng(seed++);
    benchmark::DoNotOptimize(hyrrt_solve(problem, params, rng).cost);
  }
}
BENCHMARK(BM_HyrrtBouncingBall)->Unit(benchmark::kMillisecond);

void BM_HysstBouncingBallBatch(benchmark::State& state) {
  const PlannerProblem problem = bouncing_ball_problem();
  HysstParams params;
  params.K = 20000;
  params.flow = {0.5, 0.001};
  params.batch_size = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RngStream rng(seed++);
    benchmark::DoNotOptimize(hysst_solve(problem, params, rng).cost);
  }
}
BENCHMARK(BM_HysstBouncingBallBatch)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_HysstPinball(benchmark::State& state) {
  const PlannerProblem problem = pinball_problem();
  HysstParams params;
  params.K = 20000;
  params.flow = {1.0, 0.01};
  params.eps_bn = 0.8;
  params.eps_s = 0.2;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    RngStream rng(seed++);
    benchmark::DoNotOptimize(hysst_solve(problem, params, rng).cost);
  }
}
BENCHMARK(BM_HysstPinball)->Unit(benchmark::kMillisecond);

}  // namespace
