#pragma once

// Small graph builders shared by the tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lambda3/graph.hpp"
#include "lambda3/graph_io.hpp"

namespace fixtures {

inline lambda3::TemporalGraph from_pairs(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
    std::uint32_t node_count_hint = 0) {
    std::vector<lambda3::WeightedEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        edges.push_back({std::min(a, b), std::max(a, b), 1});
    return lambda3::graph_from_edges(edges, node_count_hint);
}

inline lambda3::TemporalGraph complete_graph(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return from_pairs(pairs, n);
}

inline lambda3::TemporalGraph path_graph(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return from_pairs(pairs, n);
}

inline lambda3::TemporalGraph cycle_graph(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    pairs.emplace_back(0, n - 1);
    return from_pairs(pairs, n);
}

inline lambda3::TemporalGraph star_graph(std::uint32_t leaves) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
    return from_pairs(pairs, leaves + 1);
}

/// Connected random graph: random spanning tree plus extra random edges.
inline lambda3::TemporalGraph random_connected_graph(std::uint32_t n, double extra_edge_prob,
                                                     std::mt19937_64& rng) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    for (std::uint32_t v = 1; v < n; ++v) {
        const std::uint32_t parent =
            static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(v));
        pairs.emplace_back(parent, v);
        present[parent][v] = present[v][parent] = true;
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (!present[i][j] && unit(rng) < extra_edge_prob) pairs.emplace_back(i, j);
    return from_pairs(pairs, n);
}

/// Random graph that may be disconnected (no spanning tree guarantee).
inline lambda3::TemporalGraph random_graph(std::uint32_t n, double edge_prob,
                                           std::mt19937_64& rng) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (unit(rng) < edge_prob) pairs.emplace_back(i, j);
    return from_pairs(pairs, n);
}

}  // namespace fixtures
