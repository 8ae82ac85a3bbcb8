#include "lambda3/community.hpp"

#include <algorithm>

#include "lambda3/rng.hpp"

namespace lambda3 {

namespace {

// Weighted graph used across Louvain levels. Self-loop weight is stored once;
// it counts twice in the weighted degree. Level-0 weights are all 1.
struct LevelGraph {
    std::uint32_t n = 0;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;  // excludes self
    std::vector<double> self_loop;
    double two_w = 0.0;  // sum of weighted degrees

    std::vector<double> weighted_degrees() const {
        std::vector<double> k(n, 0.0);
        for (std::uint32_t v = 0; v < n; ++v) {
            double d = 2.0 * self_loop[v];
            for (const auto& [u, w] : adj[v]) d += w;
            k[v] = d;
        }
        return k;
    }
};

LevelGraph level_from_graph(const TemporalGraph& g) {
    LevelGraph lg;
    lg.n = g.node_count();
    lg.adj.resize(lg.n);
    lg.self_loop.assign(lg.n, 0.0);
    for (NodeId v = 0; v < lg.n; ++v) {
        const auto adj = g.neighbors(v);
        lg.adj[v].reserve(adj.size());
        for (NodeId u : adj) lg.adj[v].emplace_back(u, 1.0);
        lg.two_w += static_cast<double>(adj.size());
    }
    return lg;
}

// One round of local moves until no node improves; returns the number of
// moves performed and leaves the (non-dense) community labels in `community`.
std::uint64_t local_moving(const LevelGraph& lg, Rng& rng, std::vector<std::uint32_t>& community) {
    const std::uint32_t n = lg.n;
    const std::vector<double> k = lg.weighted_degrees();
    std::vector<double> tot(n, 0.0);
    for (std::uint32_t v = 0; v < n; ++v) tot[community[v]] += k[v];

    std::vector<std::uint32_t> order(n);
    for (std::uint32_t v = 0; v < n; ++v) order[v] = v;

    // Scratch for per-node neighbor-community weights (sparse reset).
    std::vector<double> w_to(n, 0.0);
    std::vector<std::uint32_t> touched;

    std::uint64_t total_moves = 0;
    const double inv_two_w = lg.two_w > 0.0 ? 1.0 / lg.two_w : 0.0;

    for (int pass = 0; pass < 1000; ++pass) {
        order = choose_without_replacement(rng, std::span<const std::uint32_t>(order), n);
        std::uint64_t moves = 0;
        for (std::uint32_t v : order) {
            const std::uint32_t c_old = community[v];
            touched.clear();
            for (const auto& [u, w] : lg.adj[v]) {
                const std::uint32_t c = community[u];
                if (w_to[c] == 0.0) touched.push_back(c);
                w_to[c] += w;
            }
            if (w_to[c_old] == 0.0) touched.push_back(c_old);  // staying is a candidate

            tot[c_old] -= k[v];
            const double stay_gain = w_to[c_old] - tot[c_old] * k[v] * inv_two_w;

            // Ascending scan + strict improvement = lowest label wins ties.
            std::sort(touched.begin(), touched.end());
            std::uint32_t best_c = c_old;
            double best_gain = stay_gain;
            for (std::uint32_t c : touched) {
                if (c == c_old) continue;
                const double gain = w_to[c] - tot[c] * k[v] * inv_two_w;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }

            tot[best_c] += k[v];
            if (best_c != c_old) {
                community[v] = best_c;
                ++moves;
            }
            for (std::uint32_t c : touched) w_to[c] = 0.0;
        }
        total_moves += moves;
        if (moves == 0) break;
    }
    return total_moves;
}

// Dense relabel in order of first appearance by node id.
std::uint32_t densify(std::vector<std::uint32_t>& community) {
    std::vector<std::uint32_t> remap(community.size(), UINT32_MAX);
    std::uint32_t next = 0;
    for (auto& c : community) {
        if (remap[c] == UINT32_MAX) remap[c] = next++;
        c = remap[c];
    }
    return next;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::uint32_t>& community,
                     std::uint32_t communities) {
    LevelGraph out;
    out.n = communities;
    out.adj.resize(communities);
    out.self_loop.assign(communities, 0.0);
    out.two_w = lg.two_w;

    std::vector<double> acc(communities, 0.0);
    std::vector<std::uint32_t> touched;
    std::vector<std::vector<std::uint32_t>> members(communities);
    for (std::uint32_t v = 0; v < lg.n; ++v) members[community[v]].push_back(v);

    for (std::uint32_t c = 0; c < communities; ++c) {
        touched.clear();
        double self = 0.0;
        for (std::uint32_t v : members[c]) {
            self += lg.self_loop[v];
            for (const auto& [u, w] : lg.adj[v]) {
                const std::uint32_t cu = community[u];
                if (cu == c) {
                    self += w * 0.5;  // each intra pair visited from both ends
                } else {
                    if (acc[cu] == 0.0) touched.push_back(cu);
                    acc[cu] += w;
                }
            }
        }
        out.self_loop[c] = self;
        std::sort(touched.begin(), touched.end());
        out.adj[c].reserve(touched.size());
        for (std::uint32_t cu : touched) {
            out.adj[c].emplace_back(cu, acc[cu]);
            acc[cu] = 0.0;
        }
    }
    return out;
}

}  // namespace

double modularity(const TemporalGraph& g, const Partition& p) {
    const std::uint32_t n = g.node_count();
    if (n == 0 || g.edge_count() == 0)
        throw invalid_parameter("modularity: graph has no edges");
    if (p.assignment.size() != n)
        throw invalid_parameter("modularity: partition size does not match graph");

    const std::uint32_t c_count = p.community_count;
    std::vector<std::uint64_t> intra(c_count, 0);
    std::vector<std::uint64_t> degree_sum(c_count, 0);
    for (NodeId v = 0; v < n; ++v) {
        const std::uint32_t c = p.assignment[v];
        if (c >= c_count) throw invalid_parameter("modularity: label out of range");
        degree_sum[c] += g.degree(v);
        for (NodeId u : g.neighbors(v))
            if (u > v && p.assignment[u] == c) ++intra[c];
    }

    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (std::uint32_t c = 0; c < c_count; ++c) {
        const double frac = static_cast<double>(degree_sum[c]) / (2.0 * m);
        q += static_cast<double>(intra[c]) / m - frac * frac;
    }
    return q;
}

Partition louvain(const TemporalGraph& g, std::uint64_t seed) {
    const std::uint32_t n = g.node_count();
    Partition result;
    result.assignment.resize(n);
    for (NodeId v = 0; v < n; ++v) result.assignment[v] = v;
    result.community_count = n;
    if (n == 0 || g.edge_count() == 0) return result;  // singletons

    Rng rng(seed);
    LevelGraph level = level_from_graph(g);
    std::vector<std::uint32_t> node_to_top(n);
    for (NodeId v = 0; v < n; ++v) node_to_top[v] = v;

    for (;;) {
        std::vector<std::uint32_t> community(level.n);
        for (std::uint32_t v = 0; v < level.n; ++v) community[v] = v;
        const std::uint64_t moves = local_moving(level, rng, community);
        if (moves == 0) break;
        const std::uint32_t communities = densify(community);
        for (NodeId v = 0; v < n; ++v) node_to_top[v] = community[node_to_top[v]];
        if (communities == level.n) break;
        level = aggregate(level, community, communities);
    }

    result.assignment = std::move(node_to_top);
    result.community_count = densify(result.assignment);
    return result;
}

std::vector<std::uint64_t> community_sizes(const Partition& p) {
    std::vector<std::uint64_t> sizes(p.community_count, 0);
    for (std::uint32_t c : p.assignment) ++sizes[c];
    return sizes;
}

std::map<std::uint64_t, std::uint64_t> community_size_distribution(const Partition& p) {
    std::map<std::uint64_t, std::uint64_t> dist;
    for (std::uint64_t s : community_sizes(p)) ++dist[s];
    return dist;
}

}  // namespace lambda3
