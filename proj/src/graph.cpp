#include "lambda3/graph.hpp"

#include <algorithm>

namespace lambda3 {

std::vector<NodeId> Interaction::participants() const {
    std::vector<NodeId> out;
    out.reserve(size());
    out.push_back(proactive);
    out.insert(out.end(), neighbors.begin(), neighbors.end());
    out.insert(out.end(), newbies.begin(), newbies.end());
    out.insert(out.end(), new_connections.begin(), new_connections.end());
    return out;
}

bool TemporalGraph::has_edge(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    if (a == b) return false;
    // Probe the smaller adjacency list.
    if (adjacency_[a].size() > adjacency_[b].size()) std::swap(a, b);
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

std::uint32_t TemporalGraph::edge_weight(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    if (a == b) return 0;
    const auto& adj = adjacency_[a];
    const auto it = std::lower_bound(adj.begin(), adj.end(), b);
    if (it == adj.end() || *it != b) return 0;
    return weights_[a][static_cast<std::size_t>(it - adj.begin())];
}

NodeId TemporalGraph::add_node(std::uint32_t created_at) {
    adjacency_.emplace_back();
    weights_.emplace_back();
    node_interactions_.push_back(0);
    created_at_.push_back(created_at);
    return static_cast<NodeId>(adjacency_.size() - 1);
}

void TemporalGraph::insert_half_edge(NodeId from, NodeId to) {
    auto& adj = adjacency_[from];
    auto& w = weights_[from];
    const auto it = std::lower_bound(adj.begin(), adj.end(), to);
    const auto pos = static_cast<std::size_t>(it - adj.begin());
    adj.insert(it, to);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), 1u);
}

bool TemporalGraph::bump_edge(NodeId a, NodeId b) {
    auto& adj = adjacency_[a];
    const auto it = std::lower_bound(adj.begin(), adj.end(), b);
    if (it != adj.end() && *it == b) {
        const auto pos = static_cast<std::size_t>(it - adj.begin());
        ++weights_[a][pos];
        auto& badj = adjacency_[b];
        const auto bit = std::lower_bound(badj.begin(), badj.end(), a);
        ++weights_[b][static_cast<std::size_t>(bit - badj.begin())];
        ++total_weight_;
        return false;
    }
    insert_half_edge(a, b);
    insert_half_edge(b, a);
    ++edge_count_;
    ++total_weight_;
    return true;
}

EdgeDelta TemporalGraph::apply_interaction(const Interaction& interaction) {
    const NodeId fresh_base = node_count();
    const bool genesis = node_count() == 0;
    if (genesis) {
        if (interaction.t != 0 || interaction.proactive != 0 || !interaction.neighbors.empty() ||
            !interaction.new_connections.empty())
            throw structural_error("first interaction on an empty graph must be a genesis clique "
                                   "(proactive 0 and newbies only)");
    } else if (interaction.proactive >= fresh_base) {
        throw structural_error("proactive node " + std::to_string(interaction.proactive) +
                               " does not exist");
    }

    // Newbies must be exactly the next fresh ids, in order.
    NodeId expected = genesis ? fresh_base + 1 : fresh_base;
    for (NodeId id : interaction.newbies) {
        if (id != expected)
            throw structural_error("newbie id " + std::to_string(id) + " is not the next fresh id " +
                                   std::to_string(expected));
        ++expected;
    }

    for (NodeId id : interaction.neighbors)
        if (id >= fresh_base)
            throw structural_error("neighbor id " + std::to_string(id) + " does not exist");
    for (NodeId id : interaction.new_connections)
        if (id >= fresh_base)
            throw structural_error("new-connection id " + std::to_string(id) + " does not exist");

    // Role disjointness over existing participants (newbies are fresh, so
    // they cannot collide with anything that validated above).
    std::vector<NodeId> existing;
    existing.reserve(1 + interaction.neighbors.size() + interaction.new_connections.size());
    if (!genesis) existing.push_back(interaction.proactive);
    existing.insert(existing.end(), interaction.neighbors.begin(), interaction.neighbors.end());
    existing.insert(existing.end(), interaction.new_connections.begin(),
                    interaction.new_connections.end());
    {
        std::vector<NodeId> sorted = existing;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw structural_error("interaction role sets overlap");
    }

    const std::uint32_t fresh =
        static_cast<std::uint32_t>(interaction.newbies.size()) + (genesis ? 1u : 0u);
    return apply_clique(existing, fresh, interaction.t);
}

EdgeDelta TemporalGraph::apply_clique(std::span<const NodeId> existing_members,
                                      std::uint32_t new_members, std::uint32_t t) {
    for (NodeId v : existing_members)
        if (v >= node_count())
            throw structural_error("clique member " + std::to_string(v) + " does not exist");
    {
        std::vector<NodeId> sorted(existing_members.begin(), existing_members.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw structural_error("clique members must be distinct");
    }

    std::vector<NodeId> members(existing_members.begin(), existing_members.end());
    members.reserve(members.size() + new_members);
    for (std::uint32_t k = 0; k < new_members; ++k) members.push_back(add_node(t));

    for (NodeId v : members) ++node_interactions_[v];

    EdgeDelta delta;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (bump_edge(members[i], members[j]))
                ++delta.new_edges;
            else
                ++delta.reinforced_edges;
        }
    }
    return delta;
}

std::uint32_t TemporalGraph::component_count() const {
    const std::uint32_t n = node_count();
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack;
    std::uint32_t components = 0;
    for (NodeId start = 0; start < n; ++start) {
        if (seen[start]) continue;
        ++components;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : adjacency_[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

TemporalGraph TemporalGraph::from_parts(std::vector<std::vector<NodeId>> adjacency,
                                        std::vector<std::vector<std::uint32_t>> weights) {
    TemporalGraph g;
    g.adjacency_ = std::move(adjacency);
    g.weights_ = std::move(weights);
    const std::size_t n = g.adjacency_.size();
    g.node_interactions_.assign(n, 0);
    g.created_at_.assign(n, 0);
    std::uint64_t half_edges = 0;
    std::uint64_t half_weight = 0;
    for (std::size_t v = 0; v < n; ++v) {
        half_edges += g.adjacency_[v].size();
        for (std::uint32_t w : g.weights_[v]) half_weight += w;
    }
    g.edge_count_ = half_edges / 2;
    g.total_weight_ = half_weight / 2;
    return g;
}

TemporalGraph replay_log(std::span<const Interaction> log) {
    TemporalGraph g;
    std::uint32_t expected_t = 0;
    for (const Interaction& interaction : log) {
        if (interaction.t != expected_t)
            throw structural_error("interaction log t=" + std::to_string(interaction.t) +
                                   " out of order (expected " + std::to_string(expected_t) + ")");
        g.apply_interaction(interaction);
        ++expected_t;
    }
    return g;
}

}  // namespace lambda3
