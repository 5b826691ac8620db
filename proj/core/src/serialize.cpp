#include "implinet/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace implinet {

std::string format_g9(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::string rank_table_csv(const DegreeRankTable& table) {
  std::string out = "rank,degree\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.rank);
    out += ',';
    out += std::to_string(row.degree);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "N,seed,clustering_excl,clustering_incl0,apl,giant_fraction,"
      "edge_count,wall_time_ms\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += format_g9(row.clustering.excl);
    out += ',';
    out += format_g9(row.clustering.incl0);
    out += ',';
    out += format_g9(row.apl.apl);
    out += ',';
    out += format_g9(row.apl.giant_fraction);
    out += ',';
    out += std::to_string(row.edge_count);
    out += ',';
    out += format_g9(row.wall_time_ms);
    out += '\n';
  }
  return out;
}

namespace {

std::string json_number(double value) {
  if (!std::isfinite(value)) return "null";
  return format_g9(value);
}

void append_field(std::string& out, const char* key, const std::string& value,
                  bool quoted = false) {
  if (out.back() != '{') out += ',';
  out += '"';
  out += key;
  out += "\":";
  if (quoted) {
    out += '"';
    out += value;
    out += '"';
  } else {
    out += value;
  }
}

}  // namespace

std::string metrics_to_json(const MetricsReport& report,
                            const std::vector<DirectedEdge>* soundness) {
  std::string out = "{";
  append_field(out, "node_count", std::to_string(report.node_count));
  append_field(out, "edge_count", std::to_string(report.edge_count));
  append_field(out, "undirected_edge_count",
               std::to_string(report.undirected_edge_count));
  if (report.clustering) {
    append_field(out, "clustering_excl", json_number(report.clustering->excl));
    append_field(out, "clustering_incl0",
                 json_number(report.clustering->incl0));
    append_field(out, "clustering_eligible_nodes",
                 std::to_string(report.clustering->eligible_nodes));
  } else {
    append_field(out, "clustering_excl", "null");
    append_field(out, "clustering_incl0", "null");
    append_field(out, "clustering_eligible_nodes", "null");
  }
  if (report.apl) {
    append_field(out, "apl", json_number(report.apl->apl));
    append_field(out, "apl_mode", report.apl->sampled ? "sampled" : "exact",
                 true);
    append_field(out, "apl_sources", std::to_string(report.apl->sources_used));
    append_field(out, "giant_fraction",
                 json_number(report.apl->giant_fraction));
    append_field(out, "giant_size", std::to_string(report.apl->giant_size));
  } else {
    append_field(out, "apl", "null");
    append_field(out, "apl_mode", "null");
    append_field(out, "apl_sources", "null");
    append_field(out, "giant_fraction", "null");
    append_field(out, "giant_size", "null");
  }
  if (report.slope_out) {
    append_field(out, "slope_out", json_number(report.slope_out->slope));
    append_field(out, "r2_out", json_number(report.slope_out->r2));
  } else {
    append_field(out, "slope_out", "null");
    append_field(out, "r2_out", "null");
  }
  if (report.slope_in) {
    append_field(out, "slope_in", json_number(report.slope_in->slope));
    append_field(out, "r2_in", json_number(report.slope_in->r2));
  } else {
    append_field(out, "slope_in", "null");
    append_field(out, "r2_in", "null");
  }
  append_field(out, "rank_range",
               "[" + std::to_string(report.rank_min) + "," +
                   std::to_string(report.rank_max) + "]");
  if (soundness) {
    std::string violations = "[";
    for (std::size_t i = 0; i < soundness->size(); ++i) {
      if (i > 0) violations += ',';
      violations += '[' + std::to_string((*soundness)[i].first) + ',' +
                    std::to_string((*soundness)[i].second) + ']';
    }
    violations += ']';
    append_field(out, "soundness_violations", violations);
  }
  out += '}';
  return out;
}

std::string transform_report_to_json(const TransformReport& report,
                                     std::size_t step) {
  auto edge_list = [](const std::vector<DirectedEdge>& edges) {
    std::string out = "[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i > 0) out += ',';
      out += '[' + std::to_string(edges[i].first) + ',' +
             std::to_string(edges[i].second) + ']';
    }
    out += ']';
    return out;
  };
  std::string out = "{";
  append_field(out, "step", std::to_string(step));
  append_field(out, "chosen", std::to_string(report.chosen));
  append_field(out, "created", std::to_string(report.created));
  append_field(out, "direction",
               report.direction == Direction::p_left ? "p_left"
                                                     : "p_prime_left",
               true);
  append_field(out, "label_before", report.label_before.to_string(), true);
  append_field(out, "label_after", report.label_after.to_string(), true);
  append_field(out, "created_label", report.created_label.to_string(), true);
  append_field(out, "rejection_rounds",
               std::to_string(report.rejection_rounds));
  append_field(out, "edges_added", edge_list(report.edges_added));
  append_field(out, "edges_removed", edge_list(report.edges_removed));
  out += '}';
  return out;
}

}  // namespace implinet
