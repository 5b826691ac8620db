#include "implinet/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <implinet/analysis.hpp>
#include <implinet/errors.hpp>
#include <implinet/growth.hpp>
#include <implinet/serialize.hpp>
#include <implinet/snapshot.hpp>

namespace fs = std::filesystem;

namespace implinet::cli {
namespace {

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

const char* mode_name(RecheckMode mode) {
  return mode == RecheckMode::recompute ? "recompute" : "prune";
}

MetricsOptions metrics_options(const Settings& s) {
  MetricsOptions mo;
  mo.rank_min = s.rank_min;
  mo.rank_max = s.rank_max;
  mo.apl = s.apl;
  mo.threads = s.threads;
  mo.with_ranks = s.with_ranks;
  mo.with_clustering = s.with_clustering;
  mo.with_apl = s.with_apl;
  return mo;
}

void append_json_field(std::string& out, const char* name,
                       const std::string& rendered) {
  if (out.back() != '{' && out.back() != '[') out += ',';
  out += '"';
  out += name;
  out += "\":";
  out += rendered;
}

std::string json_or_null(const std::optional<double>& value) {
  return value ? format_g9(*value) : "null";
}

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  m.count = xs.size();
  if (xs.empty()) return m;
  double sum = 0.0;
  for (const double x : xs) sum += x;
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (const double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

std::string moments_json(const std::vector<double>& xs) {
  if (xs.empty()) return "null";
  const Moments m = moments(xs);
  std::string out = "{";
  append_json_field(out, "mean", format_g9(m.mean));
  append_json_field(out, "stddev", format_g9(m.stddev));
  out += '}';
  return out;
}

/// Per-seed figures kept for the reproduce summary.
struct RunSummary {
  std::uint64_t seed = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t undirected_edge_count = 0;
  std::optional<double> slope_out;
  std::optional<double> r2_out;
  std::optional<double> slope_in;
  std::optional<double> r2_in;
  double clustering_excl = 0.0;
  double clustering_incl0 = 0.0;
  double apl = 0.0;
  double giant_fraction = 0.0;
  std::size_t soundness_violations = 0;
};

void write_rank_tables(const MetricsReport& metrics, const std::string& prefix) {
  if (metrics.rank_out) {
    write_text_file(prefix + ".rank_out.csv", rank_table_csv(*metrics.rank_out));
  }
  if (metrics.rank_in) {
    write_text_file(prefix + ".rank_in.csv", rank_table_csv(*metrics.rank_in));
  }
  if (metrics.rank_undirected) {
    write_text_file(prefix + ".rank_undirected.csv",
                    rank_table_csv(*metrics.rank_undirected));
  }
}

}  // namespace

int cmd_grow(const Settings& s) {
  if (!s.seed_given) throw InputError("grow requires --seed");
  if (!s.out_given) throw InputError("grow requires --out");

  std::ofstream trace_out;
  const std::string trace_path = s.out + ".trace";
  std::size_t step = 0;
  StepHook hook;
  if (s.trace) {
    trace_out.open(trace_path, std::ios::binary);
    if (!trace_out) {
      throw IoError("cannot open " + trace_path + " for writing");
    }
    hook = [&trace_out, &step](const DirectedGraph&,
                               const TransformReport& report) {
      trace_out << transform_report_to_json(report, ++step) << '\n';
    };
  }

  const GrowthResult result = grow(s.growth, false, hook);
  if (s.trace) {
    trace_out.flush();
    if (!trace_out) throw IoError("failed writing " + trace_path);
  }
  write_snapshot_file(result.graph, s.out);

  std::cerr << "grew " << result.graph.node_count() << " nodes, "
            << result.graph.edge_count() << " edges (seed " << s.growth.seed
            << ", mode " << mode_name(s.growth.recheck_mode) << ") -> "
            << s.out << "\n";
  if (s.trace) {
    std::cerr << "trace (" << step << " steps) -> " << trace_path << "\n";
  }
  return 0;
}

int cmd_analyze(const Settings& s) {
  const DirectedGraph graph = read_snapshot_file(s.input);

  const MetricsReport metrics = compute_metrics(graph, metrics_options(s));
  const std::vector<DirectedEdge> violations = validate_soundness(graph);
  const std::string json = metrics_to_json(metrics, &violations);

  std::string prefix;
  if (s.out_given) {
    prefix = s.out;
  } else {
    fs::path p(s.input);
    p.replace_extension();
    prefix = p.string();
  }

  write_text_file(prefix + ".metrics.json", json + "\n");
  write_rank_tables(metrics, prefix);

  if (s.print_metrics) {
    std::cout << json << "\n";
  }

  std::cerr << "analyzed " << s.input << ": " << metrics.node_count
            << " nodes, " << metrics.edge_count << " edges";
  if (metrics.clustering) {
    std::cerr << ", clustering " << format_g9(metrics.clustering->excl);
  }
  if (metrics.apl) {
    std::cerr << ", apl " << format_g9(metrics.apl->apl);
  }
  std::cerr << ", " << violations.size() << " soundness violations -> "
            << prefix << ".metrics.json\n";
  return 0;
}

int cmd_sweep(const Settings& s) {
  if (!s.out_given) throw InputError("sweep requires --out");
  const std::vector<std::size_t> n_list =
      s.reference_list ? reference_n_list() : s.n_list;
  if (n_list.empty()) {
    throw InputError("sweep requires --n-list or --paper-n-list");
  }
  const std::vector<std::uint64_t> seeds = seed_sequence(s);

  SweepOptions so;
  so.apl = s.apl;
  so.jobs = s.jobs;
  so.threads = s.threads;

  std::cerr << "sweeping " << n_list.size() << " sizes x " << seeds.size()
            << " seeds (mode " << mode_name(s.growth.recheck_mode) << ")\n";
  const std::vector<SweepRow> rows = run_sweep(s.growth, n_list, seeds, so);
  write_text_file(s.out, sweep_csv(rows));

  std::cerr << "sweep: " << rows.size() << " rows -> " << s.out << "\n";
  return 0;
}

int cmd_reproduce(const Settings& s) {
  if (!s.out_given) throw InputError("reproduce requires --out <directory>");
  const fs::path dir(s.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory " + dir.string() + ": " +
                  ec.message());
  }

  const std::vector<std::uint64_t> seeds = seed_sequence(s);
  MetricsOptions mo;
  mo.rank_min = s.rank_min;
  mo.rank_max = s.rank_max;
  mo.apl = s.apl;
  mo.threads = s.threads;

  std::vector<RunSummary> runs;
  runs.reserve(seeds.size());
  for (const std::uint64_t seed : seeds) {
    GrowthConfig cfg = s.growth;
    cfg.seed = seed;
    const GrowthResult result = grow(cfg);
    const std::string stem = (dir / ("seed" + std::to_string(seed))).string();

    write_snapshot_file(result.graph, stem + ".snap");
    const MetricsReport metrics = compute_metrics(result.graph, mo);
    const std::vector<DirectedEdge> violations =
        validate_soundness(result.graph);
    write_text_file(stem + ".metrics.json",
                    metrics_to_json(metrics, &violations) + "\n");
    write_rank_tables(metrics, stem);

    RunSummary run;
    run.seed = seed;
    run.node_count = metrics.node_count;
    run.edge_count = metrics.edge_count;
    run.undirected_edge_count = metrics.undirected_edge_count;
    if (metrics.slope_out) {
      run.slope_out = metrics.slope_out->slope;
      run.r2_out = metrics.slope_out->r2;
    }
    if (metrics.slope_in) {
      run.slope_in = metrics.slope_in->slope;
      run.r2_in = metrics.slope_in->r2;
    }
    if (metrics.clustering) {
      run.clustering_excl = metrics.clustering->excl;
      run.clustering_incl0 = metrics.clustering->incl0;
    }
    if (metrics.apl) {
      run.apl = metrics.apl->apl;
      run.giant_fraction = metrics.apl->giant_fraction;
    }
    run.soundness_violations = violations.size();
    runs.push_back(run);

    std::cerr << "seed " << seed << ": " << run.node_count << " nodes, "
              << run.edge_count << " edges, slope_out "
              << json_or_null(run.slope_out) << ", clustering "
              << format_g9(run.clustering_excl) << ", apl "
              << format_g9(run.apl) << "\n";
  }

  const std::vector<std::size_t> n_list =
      s.n_list.empty() ? reference_n_list() : s.n_list;
  SweepOptions so;
  so.apl = s.apl;
  so.jobs = s.jobs;
  so.threads = s.threads;
  std::cerr << "sweeping " << n_list.size() << " sizes x " << seeds.size()
            << " seeds\n";
  const std::vector<SweepRow> rows = run_sweep(s.growth, n_list, seeds, so);
  write_text_file((dir / "sweep.csv").string(), sweep_csv(rows));

  std::string json = "{";
  {
    std::string cfg = "{";
    append_json_field(cfg, "n_bits", std::to_string(s.growth.n_bits));
    append_json_field(cfg, "m", std::to_string(s.growth.m));
    append_json_field(cfg, "target_n", std::to_string(s.growth.target_n));
    std::string mode = "\"";
    mode += mode_name(s.growth.recheck_mode);
    mode += '"';
    append_json_field(cfg, "mode", mode);
    std::string labels = "[";
    for (const BitString& label : s.growth.initial_labels) {
      if (labels.back() != '[') labels += ',';
      labels += '"' + label.to_string() + '"';
    }
    labels += ']';
    append_json_field(cfg, "initial_labels", labels);
    std::string seed_list = "[";
    for (const std::uint64_t seed : seeds) {
      if (seed_list.back() != '[') seed_list += ',';
      seed_list += std::to_string(seed);
    }
    seed_list += ']';
    append_json_field(cfg, "seeds", seed_list);
    cfg += '}';
    append_json_field(json, "config", cfg);
  }
  {
    std::string refs = "{";
    append_json_field(refs, "clustering", format_g9(0.77));
    append_json_field(refs, "apl_per_log10_n", format_g9(0.8));
    refs += '}';
    append_json_field(json, "references", refs);
  }
  {
    std::string list = "[";
    for (const RunSummary& run : runs) {
      if (list.back() != '[') list += ',';
      std::string obj = "{";
      append_json_field(obj, "seed", std::to_string(run.seed));
      append_json_field(obj, "node_count", std::to_string(run.node_count));
      append_json_field(obj, "edge_count", std::to_string(run.edge_count));
      append_json_field(obj, "undirected_edge_count",
                        std::to_string(run.undirected_edge_count));
      append_json_field(obj, "slope_out", json_or_null(run.slope_out));
      append_json_field(obj, "r2_out", json_or_null(run.r2_out));
      append_json_field(obj, "slope_in", json_or_null(run.slope_in));
      append_json_field(obj, "r2_in", json_or_null(run.r2_in));
      append_json_field(obj, "clustering_excl",
                        format_g9(run.clustering_excl));
      append_json_field(obj, "clustering_incl0",
                        format_g9(run.clustering_incl0));
      append_json_field(obj, "apl", format_g9(run.apl));
      append_json_field(obj, "giant_fraction",
                        format_g9(run.giant_fraction));
      append_json_field(obj, "soundness_violations",
                        std::to_string(run.soundness_violations));
      obj += '}';
      list += obj;
    }
    list += ']';
    append_json_field(json, "runs", list);
  }
  {
    std::vector<double> slope_out, slope_in, excl, incl0, apl;
    for (const RunSummary& run : runs) {
      if (run.slope_out) slope_out.push_back(*run.slope_out);
      if (run.slope_in) slope_in.push_back(*run.slope_in);
      excl.push_back(run.clustering_excl);
      incl0.push_back(run.clustering_incl0);
      apl.push_back(run.apl);
    }
    std::string agg = "{";
    append_json_field(agg, "slope_out", moments_json(slope_out));
    append_json_field(agg, "slope_in", moments_json(slope_in));
    append_json_field(agg, "clustering_excl", moments_json(excl));
    append_json_field(agg, "clustering_incl0", moments_json(incl0));
    append_json_field(agg, "apl", moments_json(apl));
    agg += '}';
    append_json_field(json, "aggregate", agg);
  }
  {
    std::string list = "[";
    std::size_t i = 0;
    while (i < rows.size()) {
      std::size_t j = i;
      std::vector<double> excl, incl0, apl, giant;
      while (j < rows.size() && rows[j].n == rows[i].n) {
        excl.push_back(rows[j].clustering.excl);
        incl0.push_back(rows[j].clustering.incl0);
        apl.push_back(rows[j].apl.apl);
        giant.push_back(rows[j].apl.giant_fraction);
        ++j;
      }
      if (list.back() != '[') list += ',';
      std::string obj = "{";
      append_json_field(obj, "n", std::to_string(rows[i].n));
      append_json_field(
          obj, "expected_apl",
          format_g9(0.8 * std::log10(static_cast<double>(rows[i].n))));
      append_json_field(obj, "clustering_excl_mean",
                        format_g9(moments(excl).mean));
      append_json_field(obj, "clustering_incl0_mean",
                        format_g9(moments(incl0).mean));
      append_json_field(obj, "apl_mean", format_g9(moments(apl).mean));
      append_json_field(obj, "giant_fraction_mean",
                        format_g9(moments(giant).mean));
      obj += '}';
      list += obj;
      i = j;
    }
    list += ']';
    append_json_field(json, "sweep", list);
  }
  json += '}';
  write_text_file((dir / "summary.json").string(), json + "\n");

  std::cerr << "reproduce: " << runs.size() << " runs, " << rows.size()
            << " sweep rows -> " << dir.string() << "\n";
  return 0;
}

}  // namespace implinet::cli
