#pragma once

#include "hyplan/cli/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyplan::cli {

// Exit codes of the hyplan tool. No other codes are returned.
inline constexpr int kExitOk = 0;          // plan found / check passed
inline constexpr int kExitUsage = 1;       // bad usage, config or input file
inline constexpr int kExitNoPlan = 2;      // planner exhausted K
inline constexpr int kExitInvalid = 3;     // trajectory failed validation

struct RunOutcome {
  std::uint64_t seed = 0;
  bool success = false;
  double cost = 0.0;
  PlannerStats stats;
  std::optional<SolutionPair> plan;
  double wall_ms = 0.0;
};

RunOutcome run_once(const RunConfig& cfg, std::uint64_t seed);

/// Flat key=value lines in a fixed order. Wall time is kept out so that the
/// file is reproducible; see format_timing.
std::string format_summary(const RunConfig& cfg, const RunOutcome& outcome);
std::string format_timing(const RunOutcome& outcome);

/// Writes trajectory.csv (when solved), summary.txt and timing.txt into
/// out_dir. Returns kExitOk or kExitNoPlan.
int plan_command(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);

struct Sweep {
  std::string key;
  std::vector<std::string> values;
};

/// "key=v1,v2,...". Throws ConfigError.
Sweep parse_sweep(const std::string& text);

struct BenchmarkRow {
  std::string key;
  std::string value;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double min_cost = 0.0;     // over successful runs; NaN without any
  double mean_cost = 0.0;
  double stddev_cost = 0.0;  // sample standard deviation; 0 below two successes
  double mean_wall_ms = 0.0;
  std::vector<RunOutcome> outcomes;  // in seed order
};

struct BenchmarkOptions {
  std::string config_path;
  std::optional<std::uint64_t> base_seed;  // defaults to the config seed
  std::size_t runs = 1;
  std::optional<Sweep> sweep;
  unsigned threads = 1;
};

/// Run i of every sweep point uses seed base_seed + i. Rows follow the sweep
/// order regardless of which worker finishes first.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& options);

/// Deterministic table: key,value,runs,successes,success_rate,min_cost,mean_cost,stddev_cost.
std::string format_benchmark_table(const std::vector<BenchmarkRow>& rows);
/// key,value,mean_wall_ms.
std::string format_benchmark_timing(const std::vector<BenchmarkRow>& rows);

/// Worker count: HYPLAN_THREADS if set (must be a positive integer),
/// otherwise the hardware concurrency. Throws ConfigError on a bad value.
unsigned benchmark_threads();

/// Checks a stored trajectory against the configured problem. Returns
/// kExitOk or kExitInvalid; the report goes to `out`.
int validate_command(const RunConfig& cfg, const SolutionPair& trajectory, std::ostream& out);

}  // namespace hyplan::cli
