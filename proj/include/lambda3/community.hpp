#pragma once

// Louvain modularity optimization (Blondel et al.) and modularity evaluation.
// Reported modularity is always computed on the unweighted simple graph;
// interaction multiplicities do not enter community detection. The weighted
// machinery below exists only because Louvain's coarsening phase needs
// aggregated edge and self-loop weights.

#include <cstdint>
#include <map>
#include <vector>

#include "lambda3/graph.hpp"

namespace lambda3 {

struct Partition {
    std::vector<std::uint32_t> assignment;  // dense labels 0..community_count-1
    std::uint32_t community_count = 0;
};

/// Newman modularity Q of a partition on the unweighted simple graph,
/// Q = sum_c [ e_c/m - (d_c/2m)^2 ]. Throws on an edgeless graph.
double modularity(const TemporalGraph& g, const Partition& p);

/// Multi-level Louvain at resolution 1. Node visit order is seeded-shuffled
/// each pass; equal-gain moves break toward the lowest community label, so
/// the result is deterministic given (graph, seed).
Partition louvain(const TemporalGraph& g, std::uint64_t seed);

/// Community id -> member count.
std::vector<std::uint64_t> community_sizes(const Partition& p);

/// Community size -> number of communities of that size.
std::map<std::uint64_t, std::uint64_t> community_size_distribution(const Partition& p);

}  // namespace lambda3
