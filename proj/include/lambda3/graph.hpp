#pragma once

// Undirected weighted temporal graph. Adjacency is kept as sorted neighbor
// vectors with aligned per-edge interaction counts, which gives deterministic
// iteration order (required for reproducible neighbor selection), O(log deg)
// membership and cache-friendly O(deg) scans.

#include <cstdint>
#include <span>
#include <vector>

#include "lambda3/errors.hpp"

namespace lambda3 {

using NodeId = std::uint32_t;

/// One growth step: the participant set becomes a clique. Role lists are
/// pairwise disjoint and never contain the proactive node.
struct Interaction {
    std::uint32_t t = 0;  // 0-based interaction index; 0 is the genesis clique
    NodeId proactive = 0;
    std::vector<NodeId> neighbors;        // existing nodes adjacent to proactive
    std::vector<NodeId> newbies;          // nodes created by this interaction
    std::vector<NodeId> new_connections;  // existing nodes not adjacent to proactive

    std::size_t size() const {
        return 1 + neighbors.size() + newbies.size() + new_connections.size();
    }

    /// Participants in role order: proactive, neighbors, newbies, new connections.
    std::vector<NodeId> participants() const;

    bool operator==(const Interaction&) const = default;
};

struct EdgeDelta {
    std::uint64_t new_edges = 0;
    std::uint64_t reinforced_edges = 0;
};

class TemporalGraph {
public:
    TemporalGraph() = default;

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(adjacency_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }
    /// Sum of edge weights over distinct edges (= total pair co-memberships).
    std::uint64_t total_edge_weight() const { return total_weight_; }

    std::uint32_t degree(NodeId v) const {
        check_node(v);
        return static_cast<std::uint32_t>(adjacency_[v].size());
    }

    /// Neighbor ids in ascending order.
    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return adjacency_[v];
    }

    /// Interaction counts aligned with neighbors(v).
    std::span<const std::uint32_t> neighbor_weights(NodeId v) const {
        check_node(v);
        return weights_[v];
    }

    /// Existing nodes that are neither v nor adjacent to v.
    std::uint32_t non_neighbors_count(NodeId v) const {
        check_node(v);
        return node_count() - 1 - degree(v);
    }

    bool has_edge(NodeId a, NodeId b) const;
    /// 0 when the edge does not exist.
    std::uint32_t edge_weight(NodeId a, NodeId b) const;

    std::uint32_t node_interactions(NodeId v) const {
        check_node(v);
        return node_interactions_[v];
    }
    std::uint32_t node_created_at(NodeId v) const {
        check_node(v);
        return created_at_[v];
    }

    /// Applies one interaction: validates roles, creates the newbies, makes
    /// the participants a clique (weight +1 per pair) and bumps per-node
    /// interaction counts. Newbie ids must be exactly the next fresh ids.
    /// The genesis interaction (t = 0 on an empty graph) additionally creates
    /// its proactive node, which must have id 0.
    EdgeDelta apply_interaction(const Interaction& interaction);

    /// Low-level clique step: creates new_members fresh nodes (created_at = t),
    /// forms a clique over existing_members plus the fresh nodes and bumps
    /// interaction counters. existing_members must be distinct, known ids.
    /// apply_interaction routes here after role validation; the co-authorship
    /// builder uses it directly (a publication may have no existing author).
    EdgeDelta apply_clique(std::span<const NodeId> existing_members, std::uint32_t new_members,
                           std::uint32_t t);

    /// Number of connected components (0 for the empty graph).
    std::uint32_t component_count() const;

    /// Assembles a graph from pre-built symmetric sorted adjacency with
    /// aligned weights (used by the edge-list reader). Temporal counters are
    /// zeroed; interaction-based invariants do not apply to such graphs.
    static TemporalGraph from_parts(std::vector<std::vector<NodeId>> adjacency,
                                    std::vector<std::vector<std::uint32_t>> weights);

private:
    void check_node(NodeId v) const {
        if (v >= adjacency_.size())
            throw invalid_parameter("node id " + std::to_string(v) + " out of range");
    }

    NodeId add_node(std::uint32_t created_at);
    // Returns true when the edge was created, false when reinforced.
    bool bump_edge(NodeId a, NodeId b);
    void insert_half_edge(NodeId from, NodeId to);

    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::vector<std::uint32_t>> weights_;
    std::vector<std::uint32_t> node_interactions_;
    std::vector<std::uint32_t> created_at_;
    std::uint64_t edge_count_ = 0;
    std::uint64_t total_weight_ = 0;
};

/// Rebuilds a graph from a complete interaction log (genesis at t = 0,
/// ascending t). Inverse of generation: replaying a generator's log yields
/// an identical graph.
TemporalGraph replay_log(std::span<const Interaction> log);

}  // namespace lambda3
