#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "polytor/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"polytor: polynomial inequality experiments on the polytorus and Boolean cube"};
  app.require_subcommand(1);

  polytor::cli::RunConfig run;
  run.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  std::uint64_t max_grid = 0;
  std::uint64_t mc = 0;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment config");
  run_cmd->add_option("--config", run.config_path, "Config JSON")->required();
  auto* seed_opt = run_cmd->add_option("--seed", seed, "Seed override (beats POLYTOR_SEED and the config)");
  run_cmd->add_option("--jobs", run.jobs, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--filter", run.filter, "Glob over check names");
  run_cmd->add_option("--out", run.output_dir, "Output directory");
  auto* grid_opt = run_cmd->add_option("--max-grid-points", max_grid, "Budget override");
  auto* mc_opt = run_cmd->add_option("--mc-samples", mc, "Budget override");

  polytor::cli::ConstantsConfig constants;
  double q = 0.0;
  double p = 0.0;
  std::uint64_t constants_seed = 0;
  auto* constants_cmd = app.add_subcommand("constants", "Estimate a cotype or type constant");
  constants_cmd->add_option("--space", constants.space_json, "Space descriptor JSON")->required();
  auto* q_opt = constants_cmd->add_option("--q", q, "Cotype exponent");
  auto* p_opt = constants_cmd->add_option("--p", p, "Type exponent");
  constants_cmd->add_option("--budget", constants.budget, "Random families searched");
  constants_cmd->add_option("--n", constants.n, "Vectors per family");
  auto* constants_seed_opt = constants_cmd->add_option("--seed", constants_seed, "Seed");

  std::filesystem::path tables_dir = "polytor-tables";
  auto* tables_cmd = app.add_subcommand("tables", "Write CSV summary tables");
  tables_cmd->add_option("--out", tables_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : polytor::cli::kExitConfig;
  }

  if (run_cmd->parsed()) {
    if (seed_opt->count() > 0) run.seed_override = seed;
    if (grid_opt->count() > 0) run.max_grid_points = max_grid;
    if (mc_opt->count() > 0) run.mc_samples = mc;
    return polytor::cli::cmd_run(run, std::cout, std::cerr);
  }
  if (constants_cmd->parsed()) {
    if (q_opt->count() > 0) constants.q = q;
    if (p_opt->count() > 0) constants.p = p;
    if (constants_seed_opt->count() > 0) constants.seed = constants_seed;
    return polytor::cli::cmd_constants(constants, std::cout, std::cerr);
  }
  return polytor::cli::cmd_tables(tables_dir, std::cout, std::cerr);
}
