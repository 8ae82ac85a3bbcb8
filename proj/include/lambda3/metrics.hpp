#pragma once

// Global structural properties of a graph: degree statistics, clustering
// coefficients, shortest-path statistics (exact all-pairs BFS or sampled
// sources), degree assortativity, and interaction-log statistics.
//
// All operations are read-only over an immutable graph. Heavy loops reduce
// through the integer kernels and combine per-node/per-worker partials in a
// fixed order, so results are independent of the worker count.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "lambda3/graph.hpp"

namespace lambda3 {

enum class PathMode { exact, sampled };

struct MetricsOptions {
    /// Empty = automatic: exact when node_count <= exact_node_limit.
    std::optional<PathMode> path_mode;
    std::uint32_t exact_node_limit = 20000;
    std::uint32_t sample_sources = 1000;
    std::uint64_t seed = 12345;  // sampled-mode source selection
    unsigned threads = 0;        // 0 = auto
};

struct PathStats {
    double mean = 0.0;            // over ordered pairs spanned by the sources
    std::uint32_t diameter = 0;   // exact, or lower bound in sampled mode
    bool diameter_is_lower_bound = false;
    std::uint64_t sources = 0;
};

struct MetricsReport {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double mean_degree = 0.0;
    double density = 0.0;
    double mean_edge_weight = 0.0;
    double global_cc = 0.0;
    double mean_local_cc = 0.0;
    std::optional<double> mean_shortest_path;  // empty when disconnected
    std::optional<std::uint32_t> diameter;
    bool diameter_is_lower_bound = false;
    std::optional<double> assortativity;  // empty when undefined (zero variance)
    std::uint32_t component_count = 0;
};

struct ClusteringStats {
    double global_cc = 0.0;      // 3 * triangles / connected triples
    double mean_local_cc = 0.0;  // degree < 2 contributes 0, all nodes counted
    std::uint64_t triangles = 0;
    std::uint64_t triples = 0;
};

struct InteractionStats {
    std::uint64_t growth_interactions = 0;     // I: genesis excluded
    double mean_per_node = 0.0;                // <i>, genesis included
    std::optional<double> mean_size;           // <s> over growth interactions
};

/// degree -> node count; the counts sum to node_count.
std::map<std::uint32_t, std::uint64_t> degree_distribution(const TemporalGraph& g);

ClusteringStats clustering_stats(const TemporalGraph& g, unsigned threads = 0);
double global_clustering(const TemporalGraph& g, unsigned threads = 0);
double mean_local_clustering(const TemporalGraph& g, unsigned threads = 0);

/// Mean shortest path and diameter. Throws disconnected_graph when the graph
/// has more than one component. In sampled mode the mean is estimated from
/// seeded random sources and the diameter is a lower bound.
PathStats shortest_path_stats(const TemporalGraph& g, PathMode mode,
                              std::uint32_t sample_sources = 1000,
                              std::uint64_t seed = 12345, unsigned threads = 0);

/// Pearson correlation of endpoint degrees over the symmetrized edge list;
/// empty for zero marginal variance (e.g. regular graphs). Throws on an
/// empty edge set.
std::optional<double> degree_assortativity(const TemporalGraph& g);

/// Table-4 statistics from a complete interaction log (genesis at t = 0).
InteractionStats interaction_stats(std::span<const Interaction> log);

/// Everything in one pass (paths skipped and left empty when disconnected).
MetricsReport compute_metrics(const TemporalGraph& g, const MetricsOptions& options = {});

/// Flat JSON object with the report's field names; unset optionals are null.
nlohmann::json metrics_to_json(const MetricsReport& report);

}  // namespace lambda3
