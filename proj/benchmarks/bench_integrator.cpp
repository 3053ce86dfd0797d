#include "hyplan/integrator.hpp"
#include "hyplan/simulation.hpp"
#include "hyplan/systems/bouncing_ball.hpp"
#include "hyplan/systems/multicopter.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace hyplan;

void BM_Rk4StepMulticopter(benchmark::State& state) {
  const HybridSystem sys = make_multicopter();
  Vector x(6);
  x << 5.2, 4.0, 0.1, -0.1, 0.1, 0.1;
  Vector u(2);
  u << -0.3, 0.2;
  for (auto _ : state) {
    x = rk4_step(sys.flow_map, x, u, 1e-3);
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_Rk4StepMulticopter);

void BM_FlowBouncingBall(benchmark::State& state) {
  const HybridSystem sys = make_bouncing_ball();
  Vector x0(2);
  x0 << 1.0, 0.0;
  const Vector u = Vector::Zero(1);
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto r = continuous_simulate(sys, x0, u, 0.4, {0.4, step});
    benchmark::DoNotOptimize(r.terminal_state.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(0.4 / step));
}
BENCHMARK(BM_FlowBouncingBall)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
