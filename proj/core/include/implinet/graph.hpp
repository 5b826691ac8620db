#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "implinet/bitstring.hpp"

namespace implinet {

/// Dense node identity, assigned in creation order starting at 0. Identity
/// is independent of the label: distinct nodes may carry equal labels.
using NodeId = std::uint32_t;

using DirectedEdge = std::pair<NodeId, NodeId>;

/// Mutable directed graph with stable node ids and mutable BitString
/// labels. Neighbor lists are kept sorted ascending, so iteration order is
/// deterministic. No self-loops, no parallel edges; the in/out adjacency
/// maps are exact mirrors of each other.
///
/// Whether an edge is consistent with the labels it connects is not this
/// class's concern; the growth engine maintains that, and tests may build
/// deliberately inconsistent graphs.
///
/// Concurrency: single writer, any number of readers between mutations.
class DirectedGraph {
 public:
  explicit DirectedGraph(int n_bits);

  int n_bits() const { return n_bits_; }
  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Appends a node with the next dense id and no incident edges.
  NodeId add_node(const BitString& label);

  /// Inserts src -> dst. Returns true if newly inserted; false if it was
  /// already present. Self-loops and unknown ids are input errors.
  bool add_edge(NodeId src, NodeId dst);

  /// Removes src -> dst. Returns true if it was present.
  bool remove_edge(NodeId src, NodeId dst);

  bool has_edge(NodeId src, NodeId dst) const;

  const BitString& label(NodeId node) const;

  /// Replaces a node's label. Edges are untouched; relabeling and edge
  /// rechecking are separate steps.
  void set_label(NodeId node, const BitString& label);

  /// Out-neighbors and in-neighbors of p merged, p excluded, ascending.
  std::vector<NodeId> adjacent_set(NodeId p) const;

  const std::vector<NodeId>& out_neighbors(NodeId node) const;
  const std::vector<NodeId>& in_neighbors(NodeId node) const;

  /// Full audit of the in/out mirror invariant and the edge counter.
  bool mirrors_consistent() const;

 private:
  void check_node(NodeId node) const;

  int n_bits_;
  std::vector<BitString> labels_;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::size_t edge_count_ = 0;
};

}  // namespace implinet
