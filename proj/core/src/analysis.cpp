#include "implinet/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "implinet/errors.hpp"
#include "parallel.hpp"

namespace implinet {

namespace {

/// Giant components beyond this many nodes fall back to sampled sources
/// under AplOptions::Mode::automatic.
constexpr std::size_t kExactSourceLimit = 20000;

constexpr NodeId kUnvisited = std::numeric_limits<NodeId>::max();

}  // namespace

DegreeRankTable degree_rank(const DirectedGraph& g, DegreeKind kind) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> degree(n);
  for (NodeId u = 0; u < n; ++u) {
    switch (kind) {
      case DegreeKind::out:
        degree[u] = g.out_neighbors(u).size();
        break;
      case DegreeKind::in:
        degree[u] = g.in_neighbors(u).size();
        break;
      case DegreeKind::undirected:
        degree[u] = g.adjacent_set(u).size();
        break;
    }
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return a < b;
  });
  DegreeRankTable table;
  table.kind = kind;
  table.rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r)
    table.rows.push_back({r + 1, degree[order[r]]});
  return table;
}

UndirectedGraph undirected_projection(const DirectedGraph& g) {
  UndirectedGraph u;
  u.node_count = g.node_count();
  u.adj.resize(u.node_count);
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < u.node_count; ++v) {
    u.adj[v] = g.adjacent_set(v);
    degree_sum += u.adj[v].size();
  }
  u.edge_count = degree_sum / 2;
  return u;
}

ClusteringResult clustering(const UndirectedGraph& g, unsigned threads) {
  const std::size_t n = g.node_count;
  std::vector<double> local(n, 0.0);
  std::vector<unsigned char> eligible(n, 0);
  detail::parallel_for(n, threads, [&](std::size_t v) {
    const auto& nv = g.adj[v];
    const std::size_t k = nv.size();
    if (k < 2) return;
    // Each edge between two neighbors shows up once in each endpoint's
    // intersection with nv, so the total is twice the triangle count.
    std::size_t twice_links = 0;
    for (NodeId u : nv) {
      const auto& nu = g.adj[u];
      auto a = nv.begin();
      auto b = nu.begin();
      while (a != nv.end() && b != nu.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++twice_links;
          ++a;
          ++b;
        }
      }
    }
    local[v] = static_cast<double>(twice_links) /
               (static_cast<double>(k) * static_cast<double>(k - 1));
    eligible[v] = 1;
  });
  ClusteringResult out;
  double excl_sum = 0.0;
  double incl_sum = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    incl_sum += local[v];
    if (eligible[v]) {
      excl_sum += local[v];
      ++out.eligible_nodes;
    }
  }
  if (out.eligible_nodes > 0)
    out.excl = excl_sum / static_cast<double>(out.eligible_nodes);
  if (n > 0) out.incl0 = incl_sum / static_cast<double>(n);
  return out;
}

namespace {

/// Sum of BFS distances from src to every reachable node.
std::uint64_t bfs_distance_sum(const UndirectedGraph& g, NodeId src,
                               std::vector<NodeId>& dist,
                               std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnvisited);
  queue.clear();
  queue.push_back(src);
  dist[src] = 0;
  std::uint64_t sum = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    for (NodeId v : g.adj[u]) {
      if (dist[v] == kUnvisited) {
        dist[v] = dist[u] + 1;
        sum += dist[v];
        queue.push_back(v);
      }
    }
  }
  return sum;
}

}  // namespace

AplResult average_path_length(const UndirectedGraph& g,
                              const AplOptions& options, unsigned threads) {
  AplResult out;
  const std::size_t n = g.node_count;
  if (n == 0) return out;

  // Components in ascending scan order; on a size tie the first one found
  // wins, which is the one with the smallest contained id.
  std::vector<NodeId> component(n, kUnvisited);
  std::vector<NodeId> queue;
  NodeId component_count = 0;
  std::vector<std::size_t> sizes;
  for (NodeId u = 0; u < n; ++u) {
    if (component[u] != kUnvisited) continue;
    queue.clear();
    queue.push_back(u);
    component[u] = component_count;
    std::size_t size = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId x = queue[head];
      ++size;
      for (NodeId v : g.adj[x])
        if (component[v] == kUnvisited) {
          component[v] = component_count;
          queue.push_back(v);
        }
    }
    sizes.push_back(size);
    ++component_count;
  }
  const NodeId giant = static_cast<NodeId>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> members;
  members.reserve(sizes[giant]);
  for (NodeId u = 0; u < n; ++u)
    if (component[u] == giant) members.push_back(u);

  out.giant_size = members.size();
  out.giant_fraction =
      static_cast<double>(members.size()) / static_cast<double>(n);
  if (members.size() < 2) return out;

  bool sampled = options.mode == AplOptions::Mode::sampled;
  if (options.mode == AplOptions::Mode::automatic)
    sampled = members.size() > kExactSourceLimit;
  std::vector<NodeId> sources;
  if (sampled) {
    const std::size_t k = std::max<std::size_t>(
        1, std::min(options.sample_sources, members.size()));
    sources.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
      sources.push_back(members[i * members.size() / k]);
  } else {
    sources = members;
  }

  std::vector<std::uint64_t> sums(sources.size(), 0);
  detail::parallel_for(sources.size(), threads, [&](std::size_t i) {
    std::vector<NodeId> dist(n);
    std::vector<NodeId> bfs_queue;
    bfs_queue.reserve(members.size());
    sums[i] = bfs_distance_sum(g, sources[i], dist, bfs_queue);
  });
  const std::uint64_t total =
      std::accumulate(sums.begin(), sums.end(), std::uint64_t{0});

  const double pairs =
      static_cast<double>(sources.size()) *
      static_cast<double>(members.size() - 1);
  out.apl = static_cast<double>(total) / pairs;
  out.sampled = sampled;
  out.sources_used = sources.size();
  return out;
}

FitResult loglog_slope(const DegreeRankTable& table, std::size_t rank_min,
                       std::size_t rank_max) {
  if (rank_min < 1 || rank_max < rank_min)
    throw InputError("loglog_slope: invalid rank range [" +
                     std::to_string(rank_min) + ", " +
                     std::to_string(rank_max) + "]");
  std::vector<double> xs;
  std::vector<double> ys;
  bool constant_degree = true;
  std::size_t first_degree = 0;
  for (const auto& row : table.rows) {
    if (row.rank < rank_min || row.rank > rank_max || row.degree < 1) continue;
    if (xs.empty())
      first_degree = row.degree;
    else if (row.degree != first_degree)
      constant_degree = false;
    xs.push_back(std::log10(static_cast<double>(row.rank)));
    ys.push_back(std::log10(static_cast<double>(row.degree)));
  }
  if (xs.size() < 3)
    throw InputError("loglog_slope: only " + std::to_string(xs.size()) +
                     " usable rows in rank range [" + std::to_string(rank_min) +
                     ", " + std::to_string(rank_max) + "], need at least 3");
  const std::size_t n = xs.size();
  const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - x_mean;
    const double dy = ys[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  FitResult fit;
  fit.points = n;
  fit.slope = sxy / sxx;
  if (constant_degree || syy <= 0.0) {
    // Zero-variance response: the flat fit is exact.
    fit.slope = 0.0;
    fit.r2 = 1.0;
    return fit;
  }
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = (ys[i] - y_mean) - fit.slope * (xs[i] - x_mean);
    ss_res += resid * resid;
  }
  fit.r2 = 1.0 - ss_res / syy;
  return fit;
}

UndirectedGraph generate_ba(std::size_t n, std::size_t links_per_node,
                            std::uint64_t seed) {
  if (links_per_node < 1)
    throw InputError("generate_ba: links_per_node must be >= 1");
  if (n < links_per_node + 1)
    throw InputError("generate_ba: n must be >= links_per_node + 1");
  UndirectedGraph g;
  g.node_count = n;
  g.adj.resize(n);
  // One entry per incident edge end; sampling an entry uniformly is
  // sampling a node proportionally to its degree.
  std::vector<NodeId> degree_pool;
  degree_pool.reserve(2 * (links_per_node * n + 1));
  const std::size_t clique = links_per_node + 1;
  for (NodeId i = 0; i < clique; ++i) {
    for (NodeId j = i + 1; j < clique; ++j) {
      g.adj[i].push_back(j);
      g.adj[j].push_back(i);
      degree_pool.push_back(i);
      degree_pool.push_back(j);
      ++g.edge_count;
    }
  }
  SeededRandom random(seed);
  std::vector<NodeId> targets;
  for (NodeId v = static_cast<NodeId>(clique); v < n; ++v) {
    targets.clear();
    while (targets.size() < links_per_node) {
      const NodeId candidate = degree_pool[static_cast<std::size_t>(
          random.uniform_below(degree_pool.size()))];
      if (std::find(targets.begin(), targets.end(), candidate) !=
          targets.end())
        continue;
      targets.push_back(candidate);
    }
    for (NodeId t : targets) {
      g.adj[v].push_back(t);
      g.adj[t].push_back(v);
      degree_pool.push_back(v);
      degree_pool.push_back(t);
      ++g.edge_count;
    }
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

MetricsReport compute_metrics(const DirectedGraph& g,
                              const MetricsOptions& options) {
  MetricsReport report;
  report.node_count = g.node_count();
  report.edge_count = g.edge_count();
  report.rank_min = options.rank_min;
  report.rank_max = options.rank_max;
  const UndirectedGraph projected = undirected_projection(g);
  report.undirected_edge_count = projected.edge_count;
  if (options.with_ranks) {
    report.rank_out = degree_rank(g, DegreeKind::out);
    report.rank_in = degree_rank(g, DegreeKind::in);
    report.rank_undirected = degree_rank(g, DegreeKind::undirected);
    try {
      report.slope_out =
          loglog_slope(*report.rank_out, options.rank_min, options.rank_max);
    } catch (const InputError&) {
    }
    try {
      report.slope_in =
          loglog_slope(*report.rank_in, options.rank_min, options.rank_max);
    } catch (const InputError&) {
    }
  }
  if (options.with_clustering)
    report.clustering = clustering(projected, options.threads);
  if (options.with_apl)
    report.apl = average_path_length(projected, options.apl, options.threads);
  return report;
}

std::vector<SweepRow> run_sweep(const GrowthConfig& config_template,
                                const std::vector<std::size_t>& n_list,
                                const std::vector<std::uint64_t>& seeds,
                                const SweepOptions& options) {
  if (n_list.empty()) throw InputError("sweep: empty N list");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw InputError("sweep: N list must be strictly ascending");
  if (seeds.empty()) throw InputError("sweep: empty seed list");
  for (std::size_t n : n_list) {
    GrowthConfig probe = config_template;
    probe.target_n = n;
    probe.validate();
  }

  std::vector<SweepRow> rows(n_list.size() * seeds.size());
  detail::parallel_for(rows.size(), options.jobs, [&](std::size_t i) {
    const std::size_t n = n_list[i / seeds.size()];
    const std::uint64_t seed = seeds[i % seeds.size()];
    const auto start = std::chrono::steady_clock::now();
    GrowthConfig cfg = config_template;
    cfg.target_n = n;
    cfg.seed = seed;
    const GrowthResult grown = grow(cfg);
    const UndirectedGraph projected = undirected_projection(grown.graph);
    SweepRow& row = rows[i];
    row.n = n;
    row.seed = seed;
    row.clustering = clustering(projected, options.threads);
    row.apl = average_path_length(projected, options.apl, options.threads);
    row.edge_count = grown.graph.edge_count();
    row.wall_time_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
  });
  return rows;
}

std::vector<std::size_t> reference_n_list() {
  std::vector<std::size_t> out;
  for (std::size_t n = 10; n <= 100; n += 10) out.push_back(n);
  for (std::size_t n = 200; n <= 1000; n += 100) out.push_back(n);
  for (std::size_t n = 1500; n <= 5000; n += 500) out.push_back(n);
  return out;
}

}  // namespace implinet
