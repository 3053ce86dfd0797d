// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "hyplan/cli/config.hpp"
#include "hyplan/cli/runner.hpp"
#include "hyplan/hysst.hpp"
#include "hyplan/simulation.hpp"
#include "hyplan/systems/bouncing_ball.hpp"
#include "hyplan/systems/multicopter.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using namespace hyplan;
using namespace hyplan::cli;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string config_path(const std::string& name) { return std::string(HYPLAN_SOURCE_DIR) + "/configs/" + name; }

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

Verdict integrator_oracle() {
  const HybridSystem ball = make_bouncing_ball();
  const auto fall = continuous_simulate(ball, vec({1.0, 0.0}), vec({0.0}), 0.4, {0.4, 1e-3});
  double ball_err = 0.0;
  for (const Sample& s : fall.segment.samples()) {
    ball_err = std::max(ball_err, std::abs(s.state[0] - (1.0 - 0.5 * 9.81 * s.time.t * s.time.t)));
  }
  const bool ball_ok = ball_err <= 1e-9 && std::abs(fall.segment.back().time.t - 0.4) < 1e-12;

  const HybridSystem copter = make_multicopter();
  const Vector x0 = vec({5.2, 4.0, 0.1, -0.1, 0.1, 0.1});
  const Vector u = vec({-0.3, 0.2});
  const auto flight = continuous_simulate(copter, x0, u, 1.0, {1.0, 1e-2});
  double copter_err = 0.0;
  for (const Sample& s : flight.segment.samples()) {
    const double t = s.time.t;
    for (int i = 0; i < 2; ++i) {
      const double p = x0[i] + x0[2 + i] * t + x0[4 + i] * t * t / 2 + u[i] * t * t * t / 6;
      copter_err = std::max(copter_err, std::abs(s.state[i] - p));
    }
  }
  const bool copter_ok = copter_err <= 1e-8 && std::abs(flight.segment.back().time.t - 1.0) < 1e-12;
  return {ball_ok && copter_ok, fmt("free fall max err %.2e, triple integrator max err %.2e", ball_err, copter_err)};
}

const std::vector<std::string> kConfigs{"bouncing_ball_hyrrt.yaml", "bouncing_ball_hysst.yaml", "pinball_hyrrt.yaml",
                                        "pinball_hysst.yaml",       "multicopter_hyrrt.yaml",   "multicopter_hysst.yaml"};

struct PlanSweep {
  std::size_t runs = 0;
  std::size_t plans = 0;
  std::size_t validator_failures = 0;
  std::size_t problem_failures = 0;
  double seconds = 0.0;
  std::string first_failure;
};

// 20 seeds per shipped config: every system, both planners.
PlanSweep sweep_all_configs() {
  PlanSweep out;
  const auto start = Clock::now();
  for (const auto& name : kConfigs) {
    const RunConfig cfg = load_config(config_path(name));
    const PlannerProblem problem = make_problem(cfg);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      ++out.runs;
      const RunOutcome o = run_once(cfg, seed);
      if (!o.plan) continue;
      ++out.plans;
      const ValidationReport report = validate_solution_pair(*o.plan, problem.system, {1e-6, 1e-9});
      const MotionPlanCheck check = check_motion_plan(*o.plan, problem, {1e-6, 1e-9});
      if (!report.passed()) ++out.validator_failures;
      if (!check.passed()) ++out.problem_failures;
      if ((!report.passed() || !check.passed()) && out.first_failure.empty()) {
        out.first_failure = name + " seed " + std::to_string(seed) + ": " + check.describe();
      }
    }
  }
  out.seconds = seconds_since(start);
  return out;
}

Verdict validator_criterion(const PlanSweep& s) {
  std::ostringstream d;
  d << s.plans << " plans from " << s.runs << " runs, " << s.validator_failures << " validator failures, "
    << fmt("%.1f s", s.seconds);
  if (!s.first_failure.empty()) d << "; " << s.first_failure;
  return {s.plans > 0 && s.validator_failures == 0 && s.seconds < 60.0, d.str()};
}

Verdict problem_criterion(const PlanSweep& s) {
  std::ostringstream d;
  d << s.problem_failures << " of " << s.plans << " plans violate a planning condition";
  return {s.plans > 0 && s.problem_failures == 0, d.str()};
}

Verdict hyrrt_feasibility() {
  RunConfig cfg = load_config(config_path("bouncing_ball_hyrrt.yaml"));
  cfg.params.K = 20000;
  const PlannerProblem problem = make_problem(cfg);
  const double e = cfg.bouncing_ball.e;
  const double g = cfg.bouncing_ball.gravity;
  const double h0 = cfg.initial_states.front()[0];
  const double apex = e * e * h0;
  // The jump fires at the first sample with h <= 0, at most one step after
  // impact, so the pre-jump speed exceeds sqrt(2 g h0) by at most g * dt.
  const double v_pre = std::sqrt(2.0 * g * h0) + g * cfg.params.flow.flow_step;
  const double apex_bound = e * e * v_pre * v_pre / (2.0 * g);
  int solved = 0;
  double slowest = 0.0;
  double highest_after_bounce = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto start = Clock::now();
    const RunOutcome o = run_once(cfg, seed);
    slowest = std::max(slowest, seconds_since(start));
    if (o.success && check_motion_plan(*o.plan, problem).passed()) {
      ++solved;
      for (const Sample& s : o.plan->samples()) {
        if (s.time.j >= 1) highest_after_bounce = std::max(highest_after_bounce, s.state[0]);
      }
    }
  }
  const bool apex_ok = highest_after_bounce <= apex_bound + 1e-12;
  return {solved >= 18 && slowest < 5.0 && apex_ok,
          fmt("%.0f/20 solved, slowest run %.3f s, max rebound height %.4f", solved, slowest, highest_after_bounce) +
              fmt(" (closed-form apex %.4f, one-step bound %.4f)", apex, apex_bound)};
}

Verdict hysst_invariants() {
  RunConfig cfg = load_config(config_path("bouncing_ball_hysst.yaml"));
  cfg.params.K = 5000;
  cfg.params.batch_size = 5000;  // keep iterating to the cap
  cfg.params.instrumented = true;
  const PlannerProblem problem = make_problem(cfg);
  RngStream rng(cfg.seed);
  const HysstResult r = hysst_solve(problem, cfg.params, rng);
  std::size_t sparse_fail = 0;
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    for (std::size_t k = i + 1; k < r.witnesses.size(); ++k) {
      if (!((r.witnesses[i].state - r.witnesses[k].state).norm() > cfg.params.eps_s)) ++sparse_fail;
    }
  }
  const bool tree_ok = r.tree.check_invariants();
  std::ostringstream d;
  d << r.stats.iterations << " iterations, " << r.stats.witness_count << " witnesses, " << r.stats.vertex_count
    << " vertices, " << r.stats.invariant_violations << " assertion failures";
  return {r.stats.iterations == 5000 && r.stats.invariant_violations == 0 && sparse_fail == 0 && tree_ok, d.str()};
}

Verdict oracle_equivalence() {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_int_distribution<int> grid(-2, 2);
  std::uniform_int_distribution<int> cost_level(0, 4);
  std::bernoulli_distribution coarse(0.5), off(0.15);
  std::size_t mismatches = 0, queries = 0;
  for (int t = 0; t < 100; ++t) {
    SearchTree tree;
    const int n = 20 + t * 3;
    const MotionId root = tree.add_root(vec({0.0, 0.0}));
    for (int i = 1; i < n; ++i) {
      const Vector x = coarse(gen) ? vec({grid(gen) * 0.25, grid(gen) * 0.25}) : vec({coord(gen), coord(gen)});
      const Motion& parent = tree.at(root);
      SolutionPair edge({Sample{parent.time, parent.state, vec({0.0})}, Sample{{1.0, 0}, x, vec({0.0})}});
      const MotionId id = tree.add_vertex(x, {1.0, 0}, cost_level(gen));
      tree.add_edge(root, id, edge, vec({0.0}));
      tree.at(id).inactive = off(gen);
    }
    for (int q = 0; q < 100; ++q, ++queries) {
      const Vector x = coarse(gen) ? vec({grid(gen) * 0.125, grid(gen) * 0.125}) : vec({coord(gen), coord(gen)});
      const double eps = q % 4 == 0 ? 0.0 : 0.3;
      // Exhaustive scans; ties resolve to the lowest id.
      MotionId nn = 0, nearest = 0, cheapest = 0;
      double nn_d = std::numeric_limits<double>::infinity(), near_d = nn_d, best_c = nn_d;
      bool any_in_ball = false;
      for (MotionId id = 0; id < tree.id_bound(); ++id) {
        const Motion& m = tree.at(id);
        if (m.inactive) continue;
        const double d = euclidean_distance(m.state, x);
        if (d < nn_d) nn_d = d, nn = id;
        if (d < near_d) near_d = d, nearest = id;
        if (d <= eps && m.acc_cost < best_c) best_c = m.acc_cost, cheapest = id, any_in_ball = true;
      }
      if (nearest_neighbor(tree, x, euclidean_distance) != nn) ++mismatches;
      if (best_near_selection(tree, x, eps, euclidean_distance) != (any_in_ball ? cheapest : nearest)) ++mismatches;
    }
  }
  std::ostringstream d;
  d << queries << " queries over 100 trees, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Verdict batch_trend() {
  const auto start = Clock::now();
  BenchmarkOptions options;
  options.config_path = config_path("bouncing_ball_hysst.yaml");
  options.runs = 15;
  options.sweep = parse_sweep("batch_size=1,3,5");
  options.threads = benchmark_threads();
  const auto rows = run_benchmark(options);
  bool ok = true;
  std::ostringstream d;
  d << "mean cost";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    d << (i ? " / " : " ") << fmt("%.4f", rows[i].mean_cost) << " (" << rows[i].successes << "/15)";
    if (rows[i].successes == 0) ok = false;
    if (i > 0 && !(rows[i].mean_cost <= rows[i - 1].mean_cost * 1.02)) ok = false;
  }
  const double secs = seconds_since(start);
  d << fmt(", %.1f s", secs);
  return {ok && secs < 300.0, d.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict determinism() {
  const auto base = std::filesystem::temp_directory_path() / ("hyplan_acceptance_" + std::to_string(::getpid()));
  std::size_t identical = 0;
  std::ostringstream log;
  for (const auto& name : kConfigs) {
    const RunConfig cfg = load_config(config_path(name));
    const auto a = base / (name + ".a");
    const auto b = base / (name + ".b");
    plan_command(cfg, a.string(), log);
    plan_command(cfg, b.string(), log);
    const std::string ta = slurp(a / "trajectory.csv");
    if (!ta.empty() && ta == slurp(b / "trajectory.csv") && slurp(a / "summary.txt") == slurp(b / "summary.txt")) {
      ++identical;
    }
  }
  std::filesystem::remove_all(base);
  std::ostringstream d;
  d << identical << "/" << kConfigs.size() << " configs byte-identical across repeated runs";
  return {identical == kConfigs.size(), d.str()};
}

Verdict pinball_end_to_end() {
  const RunConfig cfg = load_config(config_path("pinball_hysst.yaml"));
  const PlannerProblem problem = make_problem(cfg);
  int passed = 0;
  double total = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto start = Clock::now();
    const RunOutcome o = run_once(cfg, seed);
    const double secs = seconds_since(start);
    total += secs;
    if (o.plan && secs < 60.0 && check_motion_plan(*o.plan, problem).passed()) ++passed;
  }
  return {passed >= 5, fmt("%.0f/10 validated plans, mean %.3f s per run", passed, total / 10.0)};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* name, const std::function<Verdict()>& criterion) {
    Verdict v;
    try {
      v = criterion();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failures;
  };

  report("integrator-oracle", integrator_oracle);
  PlanSweep sweep;
  report("solution-validator", [&] {
    sweep = sweep_all_configs();
    return validator_criterion(sweep);
  });
  report("planning-conditions", [&] { return problem_criterion(sweep); });
  report("hyrrt-feasibility", hyrrt_feasibility);
  report("hysst-invariants", hysst_invariants);
  report("oracle-equivalence", oracle_equivalence);
  report("batch-size-trend", batch_trend);
  report("determinism", determinism);
  report("pinball-end-to-end", pinball_end_to_end);
  return failures == 0 ? 0 : 1;
}
