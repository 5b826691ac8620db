#pragma once

#include <string>
#include <vector>

#include "implinet/analysis.hpp"
#include "implinet/growth.hpp"

namespace implinet {

/// Shortest text with 9 significant digits ("%.9g"). All floating-point
/// numbers in emitted data files go through this, so re-runs are
/// byte-comparable.
std::string format_g9(double value);

/// CSV with header "rank,degree".
std::string rank_table_csv(const DegreeRankTable& table);

/// CSV with header
/// "N,seed,clustering_excl,clustering_incl0,apl,giant_fraction,edge_count,wall_time_ms".
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Single JSON object with the scalar metrics; rank tables travel as CSV.
/// Metrics that were not computed render as null. When `soundness` is
/// given, the object carries a "soundness_violations" array.
std::string metrics_to_json(const MetricsReport& report,
                            const std::vector<DirectedEdge>* soundness = nullptr);

/// One-line JSON object for a transformation report (trace files hold one
/// per line).
std::string transform_report_to_json(const TransformReport& report,
                                     std::size_t step);

}  // namespace implinet
