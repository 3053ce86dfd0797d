#include "hyplan/cli/config.hpp"
#include "hyplan/cli/runner.hpp"
#include "hyplan/cli/trajectory_csv.hpp"
#include "hyplan/error.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace hyplan::cli;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path.string() + ": cannot write file");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling-based motion planning for hybrid systems (HyRRT / HySST)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::size_t runs = 1;
  std::string sweep_text;
  std::string trajectory_path;

  auto* plan = app.add_subcommand("plan", "Run the configured planner and write trajectory.csv and summary.txt");
  plan->add_option("--config", config_path, "Run configuration (YAML)")->required();
  auto* plan_seed = plan->add_option("--seed", seed, "Override the configured seed");
  auto* plan_out = plan->add_option("--out", out_dir, "Output directory (default: config 'output')");

  auto* bench = app.add_subcommand("benchmark", "Seeded runs per sweep point; writes benchmark.csv");
  bench->add_option("--config", config_path, "Run configuration (YAML)")->required();
  auto* bench_seed = bench->add_option("--seed", seed, "Base seed; run i uses seed + i (default: config seed)");
  bench->add_option("--runs", runs, "Runs per sweep point")->check(CLI::PositiveNumber);
  bench->add_option("--sweep", sweep_text, "Parameter sweep key=v1,v2,... (bare keys refer to 'planner')");
  auto* bench_out = bench->add_option("--out", out_dir, "Output directory (default: config 'output')");

  auto* validate = app.add_subcommand("validate", "Check a trajectory CSV against the configured problem");
  validate->add_option("--config", config_path, "Run configuration (YAML)")->required();
  validate->add_option("trajectory,--trajectory", trajectory_path, "Trajectory CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*plan) {
      RunConfig cfg = load_config(config_path);
      if (*plan_seed) cfg.seed = seed;
      return plan_command(cfg, *plan_out ? out_dir : cfg.output_dir, std::cout);
    }
    if (*bench) {
      BenchmarkOptions options;
      options.config_path = config_path;
      options.runs = runs;
      if (*bench_seed) options.base_seed = seed;
      if (!sweep_text.empty()) options.sweep = parse_sweep(sweep_text);
      options.threads = benchmark_threads();
      const RunConfig cfg = load_config(config_path);
      const std::filesystem::path dir(*bench_out ? out_dir : cfg.output_dir);
      std::filesystem::create_directories(dir);
      const auto rows = run_benchmark(options);
      const std::string table = format_benchmark_table(rows);
      write_text(dir / "benchmark.csv", table);
      write_text(dir / "benchmark_timing.csv", format_benchmark_timing(rows));
      std::cout << table;
      for (const auto& row : rows) {
        if (row.successes > 0) return kExitOk;
      }
      return kExitNoPlan;
    }
    if (*validate) {
      const RunConfig cfg = load_config(config_path);
      const hyplan::SolutionPair sp = load_trajectory_csv(trajectory_path);
      return validate_command(cfg, sp, std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CsvError& e) {
    std::cerr << "trajectory error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
