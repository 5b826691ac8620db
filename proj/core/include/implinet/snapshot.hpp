#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "implinet/graph.hpp"

namespace implinet {

/// Serializable image of a DirectedGraph: node records in ascending id
/// order and edge records in ascending (src, dst) order. Round-trips
/// losslessly through both the text and the JSON rendering.
struct Snapshot {
  int n_bits = 1;
  std::vector<std::pair<NodeId, std::string>> nodes;
  std::vector<DirectedEdge> edges;

  bool operator==(const Snapshot& o) const = default;
};

Snapshot save_snapshot(const DirectedGraph& g);

/// Rebuilds the graph, validating ids, label widths, and edge records.
/// Malformed input throws ParseError naming the offending record.
DirectedGraph load_snapshot(const Snapshot& s);

/// Text rendering:
///   implinet-snapshot v1 n_bits=<n>
///   node <id> <label>
///   edge <src> <dst>
std::string to_text(const Snapshot& s);
Snapshot parse_text(std::string_view text);

/// JSON rendering of the same content with identical ordering:
///   {"n_bits":n, "nodes":[[id,"label"],...], "edges":[[src,dst],...]}
std::string to_json(const Snapshot& s);
Snapshot parse_json(std::string_view text);

/// Writes the graph to `path`; a ".json" extension selects the JSON
/// rendering, anything else the text rendering.
void write_snapshot_file(const DirectedGraph& g,
                         const std::filesystem::path& path);

/// Reads either rendering, deciding by the first non-space character.
DirectedGraph read_snapshot_file(const std::filesystem::path& path);

}  // namespace implinet
