#include "implinet/cli.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>

#include <implinet/errors.hpp>

#include "implinet/commands.hpp"
#include "implinet/options.hpp"

namespace implinet::cli {
namespace {

void add_common_flags(CLI::App& cmd, FlagValues& f) {
  cmd.add_option("--seed", f.seed, "Base random seed (u64)");
  cmd.add_option("--n-bits", f.n_bits, "Label width in bits (default 14)");
  cmd.add_option("--m", f.m, "Initial node count (default 2)");
  cmd.add_option("--target-n", f.target_n,
                 "Final node count (default 10000)");
  cmd.add_option("--initial-label", f.initial_labels,
                 "Initial node label, repeatable m times (default "
                 "00000001111111 when --n-bits is 14)");
  cmd.add_option("--mode", f.mode,
                 "Edge recheck mode: recompute or prune (default recompute)");
  cmd.add_option("--out", f.out, "Output path");
  cmd.add_option("--config", f.config_path,
                 "JSON config file; flags override its values");
  cmd.add_option("--n-list", f.n_list, "Comma-separated sweep sizes");
  cmd.add_flag("--paper-n-list", f.paper_n_list,
               "Use the reference sweep sizes (10..100 by 10, 200..1000 by "
               "100, 1500..5000 by 500)");
  cmd.add_option("--seeds", f.seeds,
                 "Number of consecutive seeds starting at --seed (default 1; "
                 "reproduce defaults to 5)");
  cmd.add_flag("--trace", f.trace,
               "Write a per-step JSONL trace next to the snapshot");
  cmd.add_option("--rank-range", f.rank_range,
                 "Rank window for the degree-distribution fit as min,max "
                 "(default 10,1000)");
  cmd.add_option("--metrics", f.metrics,
                 "Metrics to compute: comma list of ranks, clustering, apl, "
                 "all (default all)");
  cmd.add_option("--apl-mode", f.apl_mode,
                 "Path-length mode: auto, exact, or sampled (default auto)");
  cmd.add_option("--apl-samples", f.apl_samples,
                 "Source count for sampled path length (default 1000)");
  cmd.add_option("--threads", f.threads,
                 "Worker threads inside one analysis (default 1)");
  cmd.add_option("--jobs", f.jobs,
                 "Parallel sweep rows (default 1)");
  cmd.add_flag("--print-metrics", f.print_metrics,
               "Also print the metrics JSON to stdout");
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"Grow and analyze implication networks"};
  app.name("implinet");
  app.require_subcommand(1);

  FlagValues flags;
  CLI::App* grow_cmd = app.add_subcommand(
      "grow", "Grow one network from a seed and write its snapshot");
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Compute metrics and rank tables for a snapshot");
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Grow networks over a size list and write a CSV of metrics");
  CLI::App* reproduce_cmd = app.add_subcommand(
      "reproduce",
      "Run the canonical 14-bit trial for several seeds plus the size sweep, "
      "with a summary against the reference curves");
  for (CLI::App* cmd : {grow_cmd, analyze_cmd, sweep_cmd, reproduce_cmd}) {
    add_common_flags(*cmd, flags);
  }
  analyze_cmd->add_option("snapshot", flags.input, "Snapshot file to analyze")
      ->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (grow_cmd->parsed()) {
      return cmd_grow(resolve_settings(flags, {true, 1}));
    }
    if (analyze_cmd->parsed()) {
      return cmd_analyze(resolve_settings(flags, {false, 1}));
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(resolve_settings(flags, {true, 1}));
    }
    return cmd_reproduce(resolve_settings(flags, {true, 5}));
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace implinet::cli
