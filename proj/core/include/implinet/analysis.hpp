#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "implinet/graph.hpp"
#include "implinet/growth.hpp"

namespace implinet {

enum class DegreeKind { out, in, undirected };

/// Degrees sorted descending with 1-based ordinal ranks; ties are broken
/// by ascending node id, so the table is deterministic. Every node gets a
/// row, including degree-zero ones.
struct DegreeRankTable {
  struct Row {
    std::size_t rank;
    std::size_t degree;
  };
  DegreeKind kind = DegreeKind::out;
  std::vector<Row> rows;
};

DegreeRankTable degree_rank(const DirectedGraph& g, DegreeKind kind);

/// Simple undirected graph with sorted neighbor lists. Produced by
/// undirected_projection and generate_ba.
struct UndirectedGraph {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::vector<NodeId>> adj;
};

/// u and v are linked iff either directed edge exists; reciprocal pairs
/// collapse to one undirected edge.
UndirectedGraph undirected_projection(const DirectedGraph& g);

struct ClusteringResult {
  /// Mean local coefficient over nodes of degree >= 2. Zero when no node
  /// qualifies; eligible_nodes tells that case apart from a true zero.
  double excl = 0.0;
  /// Mean over all nodes, counting degree < 2 nodes as zero.
  double incl0 = 0.0;
  std::size_t eligible_nodes = 0;
};

/// Local coefficient c(v) = 2 T(v) / (k (k - 1)) with T(v) the number of
/// edges among v's neighbors. Results are independent of the thread count.
ClusteringResult clustering(const UndirectedGraph& g, unsigned threads = 1);

struct AplOptions {
  enum class Mode {
    /// Exact up to 20000 giant-component nodes, sampled beyond.
    automatic,
    exact,
    sampled,
  };
  Mode mode = Mode::automatic;
  /// Source count for sampled mode; sources are evenly spaced over the
  /// giant component's sorted node list, so no randomness is involved.
  std::size_t sample_sources = 1000;
};

struct AplResult {
  /// Mean shortest-path distance over unordered pairs in the largest
  /// connected component (ties broken by smallest contained node id).
  /// Zero when that component has fewer than two nodes.
  double apl = 0.0;
  double giant_fraction = 0.0;
  std::size_t giant_size = 0;
  bool sampled = false;
  std::size_t sources_used = 0;
};

/// Breadth-first search from every giant-component node (or an evenly
/// spaced sample of them). Distance sums are integers accumulated per
/// source and reduced in index order, so the result is independent of the
/// thread count.
AplResult average_path_length(const UndirectedGraph& g,
                              const AplOptions& options = {},
                              unsigned threads = 1);

struct FitResult {
  double slope = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log10(degree) against log10(rank) over the rows
/// with rank in [rank_min, rank_max] and degree >= 1. Fewer than 3 usable
/// rows is an input error. A zero-variance response fits slope 0 with r2
/// reported as 1.0.
FitResult loglog_slope(const DegreeRankTable& table, std::size_t rank_min,
                       std::size_t rank_max);

/// Barabasi-Albert baseline: seed clique of links_per_node + 1 nodes, then
/// each new node attaches links_per_node edges to existing nodes with
/// probability proportional to current degree, duplicate targets redrawn.
/// Requires n >= links_per_node + 1 >= 2.
UndirectedGraph generate_ba(std::size_t n, std::size_t links_per_node,
                            std::uint64_t seed);

struct MetricsOptions {
  std::size_t rank_min = 10;
  std::size_t rank_max = 1000;
  AplOptions apl;
  unsigned threads = 1;
  bool with_ranks = true;
  bool with_clustering = true;
  bool with_apl = true;
};

struct MetricsReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t undirected_edge_count = 0;
  std::size_t rank_min = 10;
  std::size_t rank_max = 1000;
  std::optional<DegreeRankTable> rank_out;
  std::optional<DegreeRankTable> rank_in;
  std::optional<DegreeRankTable> rank_undirected;
  std::optional<ClusteringResult> clustering;
  std::optional<AplResult> apl;
  /// Absent when the rank window holds fewer than 3 usable rows.
  std::optional<FitResult> slope_out;
  std::optional<FitResult> slope_in;
};

/// All metrics for one graph. Pure: repeated calls return identical
/// results.
MetricsReport compute_metrics(const DirectedGraph& g,
                              const MetricsOptions& options = {});

struct SweepRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  ClusteringResult clustering;
  AplResult apl;
  std::size_t edge_count = 0;
  double wall_time_ms = 0.0;
};

struct SweepOptions {
  AplOptions apl;
  /// Worker threads for independent (N, seed) rows. Row values are
  /// independent of this; only wall_time_ms is timing-sensitive.
  unsigned jobs = 1;
  unsigned threads = 1;
};

/// Grows one network per (N, seed) pair from the config template and
/// reports clustering, path length, and size figures. Rows are ordered by
/// N first, then seed. n_list must be non-empty and strictly ascending.
std::vector<SweepRow> run_sweep(const GrowthConfig& config_template,
                                const std::vector<std::size_t>& n_list,
                                const std::vector<std::uint64_t>& seeds,
                                const SweepOptions& options = {});

/// The N values of the reference sweep: 10..100 by 10, 200..1000 by 100,
/// then 1500..5000 by 500. 27 values.
std::vector<std::size_t> reference_n_list();

}  // namespace implinet
