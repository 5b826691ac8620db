#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <implinet/analysis.hpp>
#include <implinet/growth.hpp>

namespace implinet::cli {

/// Raw flag values exactly as parsed; std::optional distinguishes "not
/// given" from any real value so flags can override config-file entries.
struct FlagValues {
  std::optional<std::uint64_t> seed;
  std::optional<int> n_bits;
  std::optional<long long> m;
  std::optional<long long> target_n;
  std::vector<std::string> initial_labels;
  std::optional<std::string> mode;
  std::optional<std::string> out;
  std::optional<std::string> config_path;
  std::optional<std::string> n_list;
  bool paper_n_list = false;
  std::optional<int> seeds;
  bool trace = false;
  std::optional<std::string> rank_range;
  std::optional<std::string> metrics;
  std::optional<std::string> apl_mode;
  std::optional<long long> apl_samples;
  std::optional<int> threads;
  std::optional<int> jobs;
  bool print_metrics = false;
  std::string input;
};

/// Effective run settings after defaults, config file, and flags are
/// merged, in that order of increasing priority.
struct Settings {
  GrowthConfig growth;
  bool seed_given = false;
  std::vector<std::string> label_text;
  std::string out;
  bool out_given = false;
  bool trace = false;
  std::vector<std::size_t> n_list;
  bool reference_list = false;
  int seed_count = 1;
  std::size_t rank_min = 10;
  std::size_t rank_max = 1000;
  bool with_ranks = true;
  bool with_clustering = true;
  bool with_apl = true;
  AplOptions apl;
  unsigned threads = 1;
  unsigned jobs = 1;
  bool print_metrics = false;
  std::string input;
};

/// Per-command merge behavior.
struct CommandDefaults {
  /// Whether initial labels are resolved (default label rule applies) and
  /// validated against n_bits and m.
  bool growth_labels = true;
  int seed_count = 1;
};

/// Merges defaults, the optional config file, and the flags. Throws
/// InputError / ParseError on invalid values and IoError when the config
/// file cannot be read.
Settings resolve_settings(const FlagValues& flags,
                          const CommandDefaults& defaults);

/// Seeds used by sweep and reproduce: base, base+1, ... The base is the
/// --seed value when given, 1 otherwise.
std::vector<std::uint64_t> seed_sequence(const Settings& s);

}  // namespace implinet::cli
