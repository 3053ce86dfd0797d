#include "hyplan/cli/runner.hpp"

#include "hyplan/cli/trajectory_csv.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace hyplan::cli {

RunOutcome run_once(const RunConfig& cfg, std::uint64_t seed) {
  const PlannerProblem problem = make_problem(cfg);
  RngStream rng(seed);
  RunOutcome outcome;
  outcome.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  PlannerResult result;
  if (cfg.planner == PlannerKind::kHyrrt) {
    result = hyrrt_solve(problem, cfg.params, rng);
  } else {
    result = hysst_solve(problem, cfg.params, rng);
  }
  outcome.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  outcome.success = result.solved();
  outcome.cost = result.solved() ? result.cost : std::numeric_limits<double>::quiet_NaN();
  outcome.stats = result.stats;
  outcome.plan = std::move(result.plan);
  return outcome;
}

std::string format_summary(const RunConfig& cfg, const RunOutcome& outcome) {
  std::ostringstream out;
  out << "system=" << cfg.system_name << '\n'
      << "planner=" << to_string(cfg.planner) << '\n'
      << "seed=" << outcome.seed << '\n'
      << "success=" << (outcome.success ? "true" : "false") << '\n'
      << "cost=" << format_double(outcome.cost) << '\n'
      << "iterations=" << outcome.stats.iterations << '\n'
      << "vertex_count=" << outcome.stats.vertex_count << '\n'
      << "witness_count=" << outcome.stats.witness_count << '\n'
      << "solution_count=" << outcome.stats.solution_count << '\n';
  if (outcome.plan) {
    out << "plan_samples=" << outcome.plan->size() << '\n'
        << "plan_jumps=" << outcome.plan->back().time.j << '\n'
        << "plan_duration=" << format_double(outcome.plan->back().time.t) << '\n';
  }
  return out.str();
}

std::string format_timing(const RunOutcome& outcome) {
  std::ostringstream out;
  out << "wall_time_ms=" << format_double(outcome.wall_ms) << '\n';
  return out.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path.string() + ": cannot write file");
  out << content;
}

}  // namespace

int plan_command(const RunConfig& cfg, const std::string& out_dir, std::ostream& log) {
  const RunOutcome outcome = run_once(cfg, cfg.seed);
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError(out_dir + ": cannot create output directory: " + ec.message());

  const auto trajectory = dir / "trajectory.csv";
  if (outcome.plan) {
    save_trajectory_csv(trajectory.string(), *outcome.plan);
  } else {
    std::filesystem::remove(trajectory, ec);
  }
  write_file(dir / "summary.txt", format_summary(cfg, outcome));
  write_file(dir / "timing.txt", format_timing(outcome));

  if (!outcome.success) {
    log << "no plan found after " << outcome.stats.iterations << " iterations (" << outcome.stats.vertex_count
        << " vertices)\n";
    return kExitNoPlan;
  }
  log << "plan found: cost " << format_double(outcome.cost) << ", " << outcome.plan->size() << " samples, "
      << outcome.plan->back().time.j << " jumps; wrote " << trajectory.string() << '\n';
  return kExitOk;
}

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ConfigError("--sweep expects key=v1,v2,... got '" + text + "'");
  }
  Sweep sweep;
  sweep.key = text.substr(0, eq);
  std::istringstream values(text.substr(eq + 1));
  std::string v;
  while (std::getline(values, v, ',')) {
    if (v.empty()) throw ConfigError("--sweep has an empty value in '" + text + "'");
    sweep.values.push_back(v);
  }
  return sweep;
}

unsigned benchmark_threads() {
  const char* env = std::getenv("HYPLAN_THREADS");
  if (env && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1) throw ConfigError(std::string("HYPLAN_THREADS must be a positive integer, got '") + env + "'");
    return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& options) {
  if (options.runs < 1) throw ConfigError("--runs must be at least 1");

  std::vector<RunConfig> points;
  std::vector<BenchmarkRow> rows;
  if (options.sweep) {
    for (const auto& value : options.sweep->values) {
      points.push_back(load_config(options.config_path, {{options.sweep->key, value}}));
      BenchmarkRow row;
      row.key = options.sweep->key;
      row.value = value;
      rows.push_back(std::move(row));
    }
  } else {
    points.push_back(load_config(options.config_path));
    BenchmarkRow row;
    row.key = "-";
    row.value = "-";
    rows.push_back(std::move(row));
  }
  const std::uint64_t base = options.base_seed ? *options.base_seed : points.front().seed;
  for (auto& row : rows) {
    row.runs = options.runs;
    row.outcomes.resize(options.runs);
  }

  const std::size_t total = points.size() * options.runs;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const std::size_t point = task / options.runs;
      const std::size_t run = task % options.runs;
      try {
        rows[point].outcomes[run] = run_once(points[point], base + run);
        rows[point].outcomes[run].plan.reset();
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, options.threads), total));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& row : rows) {
    std::vector<double> costs;
    double wall = 0.0;
    for (const auto& o : row.outcomes) {
      wall += o.wall_ms;
      if (o.success) costs.push_back(o.cost);
    }
    row.successes = costs.size();
    row.mean_wall_ms = wall / static_cast<double>(row.runs);
    if (costs.empty()) {
      row.min_cost = row.mean_cost = row.stddev_cost = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double sum = 0.0;
    row.min_cost = costs.front();
    for (double c : costs) {
      sum += c;
      row.min_cost = std::min(row.min_cost, c);
    }
    row.mean_cost = sum / static_cast<double>(costs.size());
    double sq = 0.0;
    for (double c : costs) sq += (c - row.mean_cost) * (c - row.mean_cost);
    row.stddev_cost = costs.size() < 2 ? 0.0 : std::sqrt(sq / static_cast<double>(costs.size() - 1));
  }
  return rows;
}

std::string format_benchmark_table(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream out;
  out << "key,value,runs,successes,success_rate,min_cost,mean_cost,stddev_cost\n";
  for (const auto& r : rows) {
    out << r.key << ',' << r.value << ',' << r.runs << ',' << r.successes << ','
        << format_double(static_cast<double>(r.successes) / static_cast<double>(r.runs)) << ','
        << format_double(r.min_cost) << ',' << format_double(r.mean_cost) << ',' << format_double(r.stddev_cost)
        << '\n';
  }
  return out.str();
}

std::string format_benchmark_timing(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream out;
  out << "key,value,mean_wall_ms\n";
  for (const auto& r : rows) out << r.key << ',' << r.value << ',' << format_double(r.mean_wall_ms) << '\n';
  return out.str();
}

int validate_command(const RunConfig& cfg, const SolutionPair& trajectory, std::ostream& out) {
  const PlannerProblem problem = make_problem(cfg);
  const MotionPlanCheck check = check_motion_plan(trajectory, problem);
  out << check.describe();
  if (check.passed()) {
    out << "valid: " << check.report.flow_steps << " flow steps, " << check.report.jump_steps << " jump steps\n";
    return kExitOk;
  }
  // Sample k sits on line k + 2 of the CSV (after the header).
  for (const auto& v : check.report.violations) {
    out << "csv line " << v.sample + 2 << ": " << to_string(v.code) << '\n';
  }
  return kExitInvalid;
}

}  // namespace hyplan::cli
