#include "implinet/growth.hpp"

#include <string>

#include "implinet/errors.hpp"

namespace implinet {

void GrowthConfig::validate() const {
  if (n_bits < 1 || n_bits > BitString::kMaxWidth)
    throw InputError("config: n_bits must be in [1, 64], got " +
                     std::to_string(n_bits));
  if (m < 1) throw InputError("config: m must be >= 1");
  if (target_n < m)
    throw InputError("config: target_n " + std::to_string(target_n) +
                     " is below m " + std::to_string(m));
  if (initial_labels.size() != m)
    throw InputError("config: expected " + std::to_string(m) +
                     " initial labels, got " +
                     std::to_string(initial_labels.size()));
  for (const BitString& label : initial_labels)
    if (label.width() != n_bits)
      throw InputError("config: initial label \"" + label.to_string() +
                       "\" does not have width " + std::to_string(n_bits));
}

DirectedGraph init_network(const GrowthConfig& cfg) {
  cfg.validate();
  DirectedGraph g(cfg.n_bits);
  for (const BitString& label : cfg.initial_labels) g.add_node(label);
  for (NodeId u = 0; u < cfg.m; ++u)
    for (NodeId v = 0; v < cfg.m; ++v)
      if (u != v && implies(g.label(u), g.label(v))) g.add_edge(u, v);
  return g;
}

namespace {

/// Re-decides one direction between x and q from the current labels.
void recheck_direction(DirectedGraph& g, NodeId src, NodeId dst,
                       TransformReport& report) {
  if (implies(g.label(src), g.label(dst))) {
    if (g.add_edge(src, dst)) report.edges_added.emplace_back(src, dst);
  } else {
    if (g.remove_edge(src, dst)) report.edges_removed.emplace_back(src, dst);
  }
}

void prune_direction(DirectedGraph& g, NodeId src, NodeId dst,
                     TransformReport& report) {
  if (g.has_edge(src, dst) && !implies(g.label(src), g.label(dst))) {
    g.remove_edge(src, dst);
    report.edges_removed.emplace_back(src, dst);
  }
}

void add_where_implied(DirectedGraph& g, NodeId src, NodeId dst,
                       TransformReport& report) {
  if (implies(g.label(src), g.label(dst)) && g.add_edge(src, dst))
    report.edges_added.emplace_back(src, dst);
}

}  // namespace

TransformReport local_transform(DirectedGraph& g, NodeId p,
                                RandomSource& random, RecheckMode mode) {
  TransformReport report;
  report.chosen = p;
  report.label_before = g.label(p);

  const std::vector<NodeId> adjacent = g.adjacent_set(p);

  report.direction =
      random.uniform_bit() ? Direction::p_left : Direction::p_prime_left;
  const DeducedPair pair = deduce_pair(report.label_before, random);
  report.rejection_rounds = pair.rejection_rounds;

  const bool p_takes_left = report.direction == Direction::p_left;
  report.label_after = p_takes_left ? pair.left : pair.right;
  report.created_label = p_takes_left ? pair.right : pair.left;

  const NodeId copy = g.add_node(report.created_label);
  report.created = copy;
  g.set_label(p, report.label_after);

  g.add_edge(report.left_node(), report.right_node());
  report.edges_added.emplace_back(report.left_node(), report.right_node());

  for (NodeId q : adjacent) {
    if (mode == RecheckMode::recompute) {
      recheck_direction(g, p, q, report);
      recheck_direction(g, q, p, report);
      recheck_direction(g, copy, q, report);
      recheck_direction(g, q, copy, report);
    } else {
      prune_direction(g, p, q, report);
      prune_direction(g, q, p, report);
      add_where_implied(g, copy, q, report);
      add_where_implied(g, q, copy, report);
    }
  }
  return report;
}

GrowthResult grow(const GrowthConfig& cfg, bool keep_reports,
                  const StepHook& hook) {
  cfg.validate();
  GrowthResult result{init_network(cfg), {}};
  SeededRandom random(cfg.seed);
  const std::size_t steps = cfg.target_n - cfg.m;
  if (keep_reports) result.reports.reserve(steps);
  for (std::size_t step = 0; step < steps; ++step) {
    const NodeId p = static_cast<NodeId>(
        random.uniform_below(result.graph.node_count()));
    TransformReport report =
        local_transform(result.graph, p, random, cfg.recheck_mode);
    if (hook) hook(result.graph, report);
    if (keep_reports) result.reports.push_back(std::move(report));
  }
  return result;
}

std::vector<DirectedEdge> validate_soundness(const DirectedGraph& g) {
  std::vector<DirectedEdge> violations;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.out_neighbors(u))
      if (!implies(g.label(u), g.label(v))) violations.emplace_back(u, v);
  return violations;
}

}  // namespace implinet
