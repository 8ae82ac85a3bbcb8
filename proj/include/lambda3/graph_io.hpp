#pragma once

// File formats shared by the CLI and the experiment runners:
//   - weighted edge list CSV: header `src,dst,weight`, one row per unordered
//     edge with src < dst, ascending (src, dst), LF line endings.
//   - interaction log JSONL: one object per line with keys `t`, `proactive`,
//     `neighbors`, `newbies`, `new_connections`, ascending t.
// Writers are byte-deterministic for a given graph/log.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "lambda3/graph.hpp"

namespace lambda3 {

struct WeightedEdge {
    NodeId src = 0;
    NodeId dst = 0;
    std::uint32_t weight = 1;

    bool operator==(const WeightedEdge&) const = default;
};

/// Graph from an explicit edge list. Node ids must be dense 0..n-1 (isolated
/// trailing nodes can be forced with node_count_hint). Temporal counters of
/// the resulting graph are zero; only structure and weights are meaningful.
TemporalGraph graph_from_edges(std::span<const WeightedEdge> edges,
                               std::uint32_t node_count_hint = 0);

void write_edge_csv(const TemporalGraph& g, std::ostream& out);
void write_edge_csv(const TemporalGraph& g, const std::filesystem::path& path);

TemporalGraph read_edge_csv(std::istream& in);
TemporalGraph read_edge_csv(const std::filesystem::path& path);

void write_interaction_log(std::span<const Interaction> log, std::ostream& out);
void write_interaction_log(std::span<const Interaction> log,
                           const std::filesystem::path& path);

std::vector<Interaction> read_interaction_log(std::istream& in);
std::vector<Interaction> read_interaction_log(const std::filesystem::path& path);

}  // namespace lambda3
