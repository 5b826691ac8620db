#include "implinet/graph.hpp"

#include <algorithm>
#include <string>

#include "implinet/errors.hpp"

namespace implinet {

namespace {

/// Sorted-vector insert; returns false if already present.
bool sorted_insert(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) return false;
  v.insert(it, x);
  return true;
}

bool sorted_erase(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return false;
  v.erase(it);
  return true;
}

bool sorted_contains(const std::vector<NodeId>& v, NodeId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

DirectedGraph::DirectedGraph(int n_bits) : n_bits_(n_bits) {
  if (n_bits < 1 || n_bits > BitString::kMaxWidth)
    throw InputError("DirectedGraph: n_bits must be in [1, 64], got " +
                     std::to_string(n_bits));
}

NodeId DirectedGraph::add_node(const BitString& label) {
  if (label.width() != n_bits_)
    throw InputError("add_node: label width " + std::to_string(label.width()) +
                     " does not match n_bits " + std::to_string(n_bits_));
  const NodeId id = static_cast<NodeId>(labels_.size());
  labels_.push_back(label);
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

bool DirectedGraph::add_edge(NodeId src, NodeId dst) {
  check_node(src);
  check_node(dst);
  if (src == dst)
    throw InputError("add_edge: self-loop on node " + std::to_string(src));
  if (!sorted_insert(out_[src], dst)) return false;
  sorted_insert(in_[dst], src);
  ++edge_count_;
  return true;
}

bool DirectedGraph::remove_edge(NodeId src, NodeId dst) {
  check_node(src);
  check_node(dst);
  if (!sorted_erase(out_[src], dst)) return false;
  sorted_erase(in_[dst], src);
  --edge_count_;
  return true;
}

bool DirectedGraph::has_edge(NodeId src, NodeId dst) const {
  check_node(src);
  check_node(dst);
  return sorted_contains(out_[src], dst);
}

const BitString& DirectedGraph::label(NodeId node) const {
  check_node(node);
  return labels_[node];
}

void DirectedGraph::set_label(NodeId node, const BitString& label) {
  check_node(node);
  if (label.width() != n_bits_)
    throw InputError("set_label: label width " + std::to_string(label.width()) +
                     " does not match n_bits " + std::to_string(n_bits_));
  labels_[node] = label;
}

std::vector<NodeId> DirectedGraph::adjacent_set(NodeId p) const {
  check_node(p);
  std::vector<NodeId> merged;
  merged.reserve(out_[p].size() + in_[p].size());
  std::set_union(out_[p].begin(), out_[p].end(), in_[p].begin(), in_[p].end(),
                 std::back_inserter(merged));
  return merged;
}

const std::vector<NodeId>& DirectedGraph::out_neighbors(NodeId node) const {
  check_node(node);
  return out_[node];
}

const std::vector<NodeId>& DirectedGraph::in_neighbors(NodeId node) const {
  check_node(node);
  return in_[node];
}

bool DirectedGraph::mirrors_consistent() const {
  std::size_t counted = 0;
  for (NodeId u = 0; u < node_count(); ++u) {
    if (!std::is_sorted(out_[u].begin(), out_[u].end())) return false;
    if (!std::is_sorted(in_[u].begin(), in_[u].end())) return false;
    for (NodeId v : out_[u]) {
      if (v == u || v >= node_count()) return false;
      if (!sorted_contains(in_[v], u)) return false;
      ++counted;
    }
    for (NodeId v : in_[u])
      if (!sorted_contains(out_[v], u)) return false;
  }
  return counted == edge_count_;
}

void DirectedGraph::check_node(NodeId node) const {
  if (node >= labels_.size())
    throw InputError("unknown node id " + std::to_string(node));
}

}  // namespace implinet
