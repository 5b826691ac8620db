#include "implinet/options.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include <implinet/errors.hpp>

namespace implinet::cli {
namespace {

constexpr std::string_view kDefaultLabel = "00000001111111";
constexpr int kDefaultLabelBits = 14;

std::uint64_t parse_uint_token(std::string_view token, const std::string& what) {
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw InputError(what + ": \"" + std::string(token) +
                     "\" is not an unsigned integer");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

RecheckMode parse_mode(const std::string& text) {
  if (text == "recompute") return RecheckMode::recompute;
  if (text == "prune") return RecheckMode::prune_only;
  throw InputError("mode must be \"recompute\" or \"prune\", got \"" + text +
                   "\"");
}

AplOptions::Mode parse_apl_mode(const std::string& text) {
  if (text == "auto") return AplOptions::Mode::automatic;
  if (text == "exact") return AplOptions::Mode::exact;
  if (text == "sampled") return AplOptions::Mode::sampled;
  throw InputError("apl mode must be \"auto\", \"exact\", or \"sampled\", got \"" +
                   text + "\"");
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const std::string_view token : split_commas(text)) {
    out.push_back(static_cast<std::size_t>(parse_uint_token(token, "n-list")));
  }
  return out;
}

void parse_rank_range(const std::string& text, Settings& s) {
  const std::vector<std::string_view> parts = split_commas(text);
  if (parts.size() != 2) {
    throw InputError("rank-range must be \"min,max\", got \"" + text + "\"");
  }
  s.rank_min = static_cast<std::size_t>(
      parse_uint_token(parts[0], "rank-range minimum"));
  s.rank_max = static_cast<std::size_t>(
      parse_uint_token(parts[1], "rank-range maximum"));
  if (s.rank_min < 1 || s.rank_max < s.rank_min) {
    throw InputError("rank-range needs 1 <= min <= max, got \"" + text + "\"");
  }
}

void parse_metrics_selection(const std::string& text, Settings& s) {
  s.with_ranks = s.with_clustering = s.with_apl = false;
  for (const std::string_view token : split_commas(text)) {
    if (token == "ranks") {
      s.with_ranks = true;
    } else if (token == "clustering") {
      s.with_clustering = true;
    } else if (token == "apl") {
      s.with_apl = true;
    } else if (token == "all") {
      s.with_ranks = s.with_clustering = s.with_apl = true;
    } else {
      throw InputError("unknown metric \"" + std::string(token) +
                       "\"; choose from ranks, clustering, apl, all");
    }
  }
}

void set_positive_count(unsigned& target, long long value, const char* what) {
  if (value < 1 || value > std::numeric_limits<int>::max()) {
    throw InputError(std::string(what) + " must be a positive integer");
  }
  target = static_cast<unsigned>(value);
}

using nlohmann::json;

std::string config_error(const std::string& path, const std::string& detail) {
  return "config " + path + ": " + detail;
}

std::uint64_t config_uint(const json& value, const std::string& path,
                          const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw ParseError(config_error(path, "\"" + key +
                                            "\" must be an unsigned integer"));
  }
  return value.get<std::uint64_t>();
}

bool config_bool(const json& value, const std::string& path,
                 const std::string& key) {
  if (!value.is_boolean()) {
    throw ParseError(config_error(path, "\"" + key + "\" must be a boolean"));
  }
  return value.get<bool>();
}

std::string config_string(const json& value, const std::string& path,
                          const std::string& key) {
  if (!value.is_string()) {
    throw ParseError(config_error(path, "\"" + key + "\" must be a string"));
  }
  return value.get<std::string>();
}

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw IoError("failed reading config file " + path);
  }

  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::exception& e) {
    throw ParseError(config_error(path, e.what()));
  }
  if (!doc.is_object()) {
    throw ParseError(config_error(path, "top level must be an object"));
  }

  for (const auto& [key, value] : doc.items()) {
    if (key == "seed") {
      s.growth.seed = config_uint(value, path, key);
      s.seed_given = true;
    } else if (key == "n_bits") {
      const std::uint64_t bits = config_uint(value, path, key);
      if (bits < 1 || bits > BitString::kMaxWidth) {
        throw ParseError(config_error(
            path, "\"n_bits\" must be between 1 and " +
                      std::to_string(BitString::kMaxWidth)));
      }
      s.growth.n_bits = static_cast<int>(bits);
    } else if (key == "m") {
      s.growth.m = static_cast<std::size_t>(config_uint(value, path, key));
    } else if (key == "target_n") {
      s.growth.target_n = static_cast<std::size_t>(config_uint(value, path, key));
    } else if (key == "initial_labels") {
      if (!value.is_array()) {
        throw ParseError(
            config_error(path, "\"initial_labels\" must be an array"));
      }
      s.label_text.clear();
      for (const json& item : value) {
        s.label_text.push_back(config_string(item, path, key));
      }
    } else if (key == "mode") {
      s.growth.recheck_mode = parse_mode(config_string(value, path, key));
    } else if (key == "out") {
      s.out = config_string(value, path, key);
      s.out_given = true;
    } else if (key == "trace") {
      s.trace = config_bool(value, path, key);
    } else if (key == "n_list") {
      if (!value.is_array()) {
        throw ParseError(config_error(path, "\"n_list\" must be an array"));
      }
      s.n_list.clear();
      for (const json& item : value) {
        s.n_list.push_back(
            static_cast<std::size_t>(config_uint(item, path, key)));
      }
    } else if (key == "paper_n_list") {
      s.reference_list = config_bool(value, path, key);
    } else if (key == "seeds") {
      const std::uint64_t count = config_uint(value, path, key);
      if (count < 1 || count > std::numeric_limits<int>::max()) {
        throw ParseError(
            config_error(path, "\"seeds\" must be a positive integer"));
      }
      s.seed_count = static_cast<int>(count);
    } else if (key == "rank_range") {
      if (!value.is_array() || value.size() != 2) {
        throw ParseError(
            config_error(path, "\"rank_range\" must be an array [min, max]"));
      }
      s.rank_min =
          static_cast<std::size_t>(config_uint(value[0], path, key));
      s.rank_max =
          static_cast<std::size_t>(config_uint(value[1], path, key));
      if (s.rank_min < 1 || s.rank_max < s.rank_min) {
        throw ParseError(
            config_error(path, "\"rank_range\" needs 1 <= min <= max"));
      }
    } else if (key == "metrics") {
      if (!value.is_array()) {
        throw ParseError(config_error(path, "\"metrics\" must be an array"));
      }
      std::string joined;
      for (const json& item : value) {
        if (!joined.empty()) joined += ',';
        joined += config_string(item, path, key);
      }
      try {
        parse_metrics_selection(joined, s);
      } catch (const InputError& e) {
        throw ParseError(config_error(path, e.what()));
      }
    } else if (key == "apl_mode") {
      try {
        s.apl.mode = parse_apl_mode(config_string(value, path, key));
      } catch (const InputError& e) {
        throw ParseError(config_error(path, e.what()));
      }
    } else if (key == "apl_samples") {
      const std::uint64_t count = config_uint(value, path, key);
      if (count < 1) {
        throw ParseError(
            config_error(path, "\"apl_samples\" must be a positive integer"));
      }
      s.apl.sample_sources = static_cast<std::size_t>(count);
    } else if (key == "threads") {
      set_positive_count(s.threads,
                         static_cast<long long>(config_uint(value, path, key)),
                         "threads");
    } else if (key == "jobs") {
      set_positive_count(s.jobs,
                         static_cast<long long>(config_uint(value, path, key)),
                         "jobs");
    } else {
      throw ParseError(config_error(path, "unknown key \"" + key + "\""));
    }
  }
}

void apply_flags(Settings& s, const FlagValues& f) {
  if (f.seed) {
    s.growth.seed = *f.seed;
    s.seed_given = true;
  }
  if (f.n_bits) s.growth.n_bits = *f.n_bits;
  if (f.m) {
    if (*f.m < 1) throw InputError("--m must be a positive integer");
    s.growth.m = static_cast<std::size_t>(*f.m);
  }
  if (f.target_n) {
    if (*f.target_n < 1) {
      throw InputError("--target-n must be a positive integer");
    }
    s.growth.target_n = static_cast<std::size_t>(*f.target_n);
  }
  if (!f.initial_labels.empty()) s.label_text = f.initial_labels;
  if (f.mode) s.growth.recheck_mode = parse_mode(*f.mode);
  if (f.out) {
    s.out = *f.out;
    s.out_given = true;
  }
  if (f.trace) s.trace = true;
  if (f.n_list) s.n_list = parse_n_list(*f.n_list);
  if (f.paper_n_list) s.reference_list = true;
  if (f.seeds) {
    if (*f.seeds < 1) throw InputError("--seeds must be a positive integer");
    s.seed_count = *f.seeds;
  }
  if (f.rank_range) parse_rank_range(*f.rank_range, s);
  if (f.metrics) parse_metrics_selection(*f.metrics, s);
  if (f.apl_mode) s.apl.mode = parse_apl_mode(*f.apl_mode);
  if (f.apl_samples) {
    if (*f.apl_samples < 1) {
      throw InputError("--apl-samples must be a positive integer");
    }
    s.apl.sample_sources = static_cast<std::size_t>(*f.apl_samples);
  }
  if (f.threads) set_positive_count(s.threads, *f.threads, "--threads");
  if (f.jobs) set_positive_count(s.jobs, *f.jobs, "--jobs");
  if (f.print_metrics) s.print_metrics = true;
  s.input = f.input;
}

void finalize_labels(Settings& s) {
  if (s.growth.n_bits < 1 || s.growth.n_bits > BitString::kMaxWidth) {
    throw InputError("n-bits must be between 1 and " +
                     std::to_string(BitString::kMaxWidth) + ", got " +
                     std::to_string(s.growth.n_bits));
  }
  if (s.label_text.empty()) {
    if (s.growth.n_bits != kDefaultLabelBits) {
      throw InputError(
          "--initial-label is required when --n-bits is not " +
          std::to_string(kDefaultLabelBits));
    }
    s.label_text.assign(s.growth.m, std::string(kDefaultLabel));
  }
  if (s.label_text.size() != s.growth.m) {
    throw InputError("expected " + std::to_string(s.growth.m) +
                     " initial labels, got " +
                     std::to_string(s.label_text.size()));
  }
  s.growth.initial_labels.clear();
  for (const std::string& text : s.label_text) {
    s.growth.initial_labels.push_back(BitString::parse(text));
  }
  s.growth.validate();
}

}  // namespace

Settings resolve_settings(const FlagValues& flags,
                          const CommandDefaults& defaults) {
  Settings s;
  s.seed_count = defaults.seed_count;
  if (flags.config_path) apply_config_file(s, *flags.config_path);
  apply_flags(s, flags);
  if (s.reference_list && !s.n_list.empty()) {
    throw InputError("--n-list and --paper-n-list are mutually exclusive");
  }
  if (defaults.growth_labels) finalize_labels(s);
  return s;
}

std::vector<std::uint64_t> seed_sequence(const Settings& s) {
  const std::uint64_t base = s.seed_given ? s.growth.seed : 1;
  std::vector<std::uint64_t> seeds;
  seeds.reserve(static_cast<std::size_t>(s.seed_count));
  for (int i = 0; i < s.seed_count; ++i) {
    seeds.push_back(base + static_cast<std::uint64_t>(i));
  }
  return seeds;
}

}  // namespace implinet::cli
