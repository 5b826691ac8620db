#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "implinet/graph.hpp"
#include "implinet/random.hpp"

namespace implinet {

/// How edges between a transformed node and its adjacent set are settled.
///
/// recompute (default): every direction between {chosen, copy} and each
/// adjacent node is re-decided from the current labels; directions that
/// newly hold are added, existing ones that fail are removed. Under this
/// mode the final edge structure does not depend on which of the two nodes
/// kept the old identity.
///
/// prune_only: existing edges of the chosen node are kept only where the
/// order still holds and no new direction is added for it; the copy gains
/// an edge in every direction where the order holds.
enum class RecheckMode { recompute, prune_only };

/// Which endpoint of the deduced relation the chosen node occupies.
enum class Direction { p_left, p_prime_left };

struct GrowthConfig {
  int n_bits = 14;
  std::size_t m = 2;
  std::vector<BitString> initial_labels;
  std::size_t target_n = 10000;
  std::uint64_t seed = 0;
  RecheckMode recheck_mode = RecheckMode::recompute;

  /// Throws InputError unless m >= 1, target_n >= m, and initial_labels
  /// holds exactly m strings of width n_bits.
  void validate() const;
};

/// Audit record of one local transformation.
struct TransformReport {
  NodeId chosen = 0;
  NodeId created = 0;
  Direction direction = Direction::p_left;
  BitString label_before;
  BitString label_after;
  BitString created_label;
  int rejection_rounds = 0;
  std::vector<DirectedEdge> edges_added;
  std::vector<DirectedEdge> edges_removed;

  /// Endpoints of the deduced edge (collapsed -> expanded).
  NodeId left_node() const {
    return direction == Direction::p_left ? chosen : created;
  }
  NodeId right_node() const {
    return direction == Direction::p_left ? created : chosen;
  }
};

/// Builds the initial network: one node per initial label, and the edge
/// u -> v for every ordered pair of distinct nodes whose labels satisfy
/// the implication order. Equal labels yield reciprocal edges.
DirectedGraph init_network(const GrowthConfig& cfg);

/// One local transformation around node p:
///   1. capture p's adjacent set A before any mutation;
///   2. draw the direction coin (a set bit gives p the collapsed side);
///   3. deduce a (left, right) label pair from p's label, relabel p with
///      its side and add the copy node carrying the other side;
///   4. add the deduced edge, collapsed node -> expanded node;
///   5. settle edges between {p, copy} and A per the recheck mode.
/// Nodes outside A and edges not incident to p or the copy are untouched.
///
/// Draws are consumed in the order: direction coin, then deduce draws.
TransformReport local_transform(DirectedGraph& g, NodeId p,
                                RandomSource& random, RecheckMode mode);

using StepHook =
    std::function<void(const DirectedGraph&, const TransformReport&)>;

struct GrowthResult {
  DirectedGraph graph;
  std::vector<TransformReport> reports;
};

/// Runs init_network, then (target_n - m) transformation steps, each
/// around a node picked uniformly from the current network. The run is a
/// pure function of the config; per step the draws are: node pick,
/// direction coin, deduce draws.
///
/// `hook`, when set, runs after every step. Reports are retained in the
/// result only when keep_reports is set; hook callers may stream instead.
GrowthResult grow(const GrowthConfig& cfg, bool keep_reports = false,
                  const StepHook& hook = {});

/// Every edge whose endpoint labels violate the implication order. Empty
/// on any graph produced by grow.
std::vector<DirectedEdge> validate_soundness(const DirectedGraph& g);

}  // namespace implinet
