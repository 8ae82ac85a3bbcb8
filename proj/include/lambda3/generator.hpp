#pragma once

// The 3-lambda growth process. A network grows by interactions: each step
// picks one proactive node uniformly, draws how many of its neighbors join,
// how many brand-new nodes appear and how many unconnected existing nodes
// get pulled in (independent Poisson counts), then turns the participant set
// into a clique. The neighbor count is drawn conditioned on not exceeding
// the proactive node's degree (redraw on overflow); the new-connection count
// is clamped to the available candidates. Generation starts from a complete
// "genesis" clique of round(1 + lambda1 + lambda2 + lambda3) nodes and stops
// once the node count reaches the target (the last interaction may overshoot
// by its newbies).

#include <cstdint>
#include <vector>

#include "lambda3/graph.hpp"
#include "lambda3/rng.hpp"

namespace lambda3 {

struct GeneratorConfig {
    std::uint32_t n_target = 0;  // N
    double lambda1 = 0.0;        // neighbors
    double lambda2 = 0.0;        // newbies; must be > 0 for the network to grow
    double lambda3 = 0.0;        // new connections
    std::uint64_t seed = 0;
};

/// Per-interaction role counts after conditioning/clamping: b neighbors
/// (b <= deg(proactive)), n newbies, e new connections (e <= candidates).
struct RoleDraw {
    std::uint32_t neighbor_count = 0;
    std::uint32_t newbie_count = 0;
    std::uint32_t new_connection_count = 0;
};

/// Participants of an interaction with counts (b, n, e): 1 + b + n + e.
constexpr std::uint64_t interaction_size(std::uint64_t b, std::uint64_t n, std::uint64_t e) {
    return 1 + b + n + e;
}

struct EdgeBounds {
    std::uint64_t min_new = 0;
    std::uint64_t max_new = 0;

    bool operator==(const EdgeBounds&) const = default;
};

/// Minimum and maximum number of edges an interaction with counts (b, n, e)
/// can create. The minimum counts the pairs that can never pre-exist
/// (everything involving a newbie, plus proactive-to-new-connection); the
/// maximum adds the pairs that may or may not pre-exist (neighbor-neighbor,
/// neighbor-new-connection, new-connection pairs).
constexpr EdgeBounds edge_bounds(std::uint64_t b, std::uint64_t n, std::uint64_t e) {
    // x * (x - 1) is 0 for x == 0 even with the unsigned wrap.
    const std::uint64_t min_new = n + e + b * n + e * n + n * (n - 1) / 2;
    const std::uint64_t optional = e * b + b * (b - 1) / 2 + e * (e - 1) / 2;
    return {min_new, min_new + optional};
}

constexpr EdgeBounds edge_bounds(const RoleDraw& draw) {
    return edge_bounds(draw.neighbor_count, draw.newbie_count, draw.new_connection_count);
}

constexpr std::uint64_t interaction_size(const RoleDraw& draw) {
    return interaction_size(draw.neighbor_count, draw.newbie_count, draw.new_connection_count);
}

/// Genesis clique size: round-half-up of 1 + lambda1 + lambda2 + lambda3.
std::uint32_t genesis_size(const GeneratorConfig& cfg);

struct GenerationResult {
    TemporalGraph graph;
    std::vector<Interaction> log;  // complete, genesis at t = 0
};

/// Stepwise generator; the evolution experiment measures between steps.
/// Construction validates the config and applies the genesis clique.
/// keep_log = false drops growth interactions after applying them (the
/// million-node correlation runs only need the graph counters).
class GeneratorSession {
public:
    explicit GeneratorSession(const GeneratorConfig& cfg, bool keep_log = true);

    const GeneratorConfig& config() const { return cfg_; }
    const TemporalGraph& graph() const { return graph_; }
    const std::vector<Interaction>& log() const { return log_; }

    bool done() const { return graph_.node_count() >= cfg_.n_target; }

    /// Runs one growth interaction and returns it. Precondition: !done().
    const Interaction& step();

    /// Runs to completion and moves the result out (requires keep_log).
    GenerationResult finish();

private:
    std::vector<NodeId> pick_new_connections(NodeId proactive, std::uint32_t count,
                                             std::uint32_t existing_nodes);

    GeneratorConfig cfg_;
    Rng rng_;
    bool keep_log_;
    std::uint32_t next_t_ = 0;
    TemporalGraph graph_;
    std::vector<Interaction> log_;
    Interaction last_;  // storage when the log is dropped
};

GenerationResult generate(const GeneratorConfig& cfg);

}  // namespace lambda3
