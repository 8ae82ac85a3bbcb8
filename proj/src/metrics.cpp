#include "lambda3/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "lambda3/kernels.hpp"
#include "lambda3/parallel.hpp"
#include "lambda3/rng.hpp"
#include "lambda3/stats.hpp"

namespace lambda3 {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Flat adjacency for the BFS sweeps.
struct Csr {
    std::vector<std::uint64_t> offsets;
    std::vector<NodeId> targets;

    static Csr build(const TemporalGraph& g) {
        const std::uint32_t n = g.node_count();
        Csr csr;
        csr.offsets.resize(n + 1, 0);
        for (NodeId v = 0; v < n; ++v) csr.offsets[v + 1] = csr.offsets[v] + g.degree(v);
        csr.targets.resize(csr.offsets[n]);
        for (NodeId v = 0; v < n; ++v) {
            const auto adj = g.neighbors(v);
            std::copy(adj.begin(), adj.end(), csr.targets.begin() +
                                                  static_cast<std::ptrdiff_t>(csr.offsets[v]));
        }
        return csr;
    }

    std::span<const NodeId> row(NodeId v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
};

struct BfsScratch {
    std::vector<std::uint32_t> dist;
    std::vector<NodeId> queue;
};

// Distance sum and eccentricity from one source; requires a connected graph.
std::pair<std::uint64_t, std::uint32_t> bfs_sweep(const Csr& csr, std::uint32_t n, NodeId src,
                                                  BfsScratch& scratch) {
    scratch.dist.assign(n, kUnreached);
    scratch.queue.clear();
    scratch.queue.reserve(n);
    scratch.dist[src] = 0;
    scratch.queue.push_back(src);
    std::size_t head = 0;
    while (head < scratch.queue.size()) {
        const NodeId v = scratch.queue[head++];
        const std::uint32_t next = scratch.dist[v] + 1;
        for (NodeId w : csr.row(v)) {
            if (scratch.dist[w] == kUnreached) {
                scratch.dist[w] = next;
                scratch.queue.push_back(w);
            }
        }
    }
    assert(scratch.queue.size() == n);
    const std::span<const std::uint32_t> dist(scratch.dist);
    return {kernels::sum_u32(dist), kernels::max_u32(dist)};
}

}  // namespace

std::map<std::uint32_t, std::uint64_t> degree_distribution(const TemporalGraph& g) {
    std::map<std::uint32_t, std::uint64_t> hist;
    for (NodeId v = 0; v < g.node_count(); ++v) ++hist[g.degree(v)];
    return hist;
}

ClusteringStats clustering_stats(const TemporalGraph& g, unsigned threads) {
    const std::uint32_t n = g.node_count();
    ClusteringStats out;
    if (n == 0) return out;

    const unsigned workers = resolve_threads(threads);
    std::vector<double> local(n, 0.0);
    std::vector<std::uint64_t> wedge_partial(workers, 0);
    std::vector<std::uint64_t> triple_partial(workers, 0);

    parallel_blocks(n, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        std::uint64_t wedges = 0;   // sum over v of 2 * triangles through v
        std::uint64_t triples = 0;  // sum over v of C(deg v, 2)
        for (NodeId v = static_cast<NodeId>(begin); v < end; ++v) {
            const auto adj = g.neighbors(v);
            const std::uint64_t deg = adj.size();
            std::uint64_t hits = 0;
            for (NodeId u : adj) hits += kernels::intersect_count_u32(adj, g.neighbors(u));
            wedges += hits;
            triples += deg * (deg - 1) / 2;
            if (deg >= 2)
                local[v] = static_cast<double>(hits) / static_cast<double>(deg * (deg - 1));
        }
        wedge_partial[w] = wedges;
        triple_partial[w] = triples;
    });

    std::uint64_t wedge_total = 0;
    std::uint64_t triple_total = 0;
    for (unsigned w = 0; w < workers; ++w) {
        wedge_total += wedge_partial[w];
        triple_total += triple_partial[w];
    }

    out.triangles = wedge_total / 6;
    out.triples = triple_total;
    out.global_cc = triple_total == 0
                        ? 0.0
                        : static_cast<double>(wedge_total) / (2.0 * static_cast<double>(triple_total));
    // Fixed-order reduction keeps the mean bit-stable across worker counts.
    double local_sum = 0.0;
    for (NodeId v = 0; v < n; ++v) local_sum += local[v];
    out.mean_local_cc = local_sum / static_cast<double>(n);
    return out;
}

double global_clustering(const TemporalGraph& g, unsigned threads) {
    return clustering_stats(g, threads).global_cc;
}

double mean_local_clustering(const TemporalGraph& g, unsigned threads) {
    return clustering_stats(g, threads).mean_local_cc;
}

PathStats shortest_path_stats(const TemporalGraph& g, PathMode mode,
                              std::uint32_t sample_sources, std::uint64_t seed,
                              unsigned threads) {
    const std::uint32_t n = g.node_count();
    if (n == 0) throw invalid_parameter("shortest_path_stats: empty graph");
    const std::uint32_t components = g.component_count();
    if (components > 1) throw disconnected_graph(components);

    PathStats out;
    if (n == 1) {
        out.sources = 1;
        return out;
    }

    std::vector<NodeId> sources;
    if (mode == PathMode::sampled && sample_sources < n) {
        if (sample_sources == 0)
            throw invalid_parameter("shortest_path_stats: sample_sources must be positive");
        std::vector<NodeId> all(n);
        for (NodeId v = 0; v < n; ++v) all[v] = v;
        Rng rng(seed);
        sources = choose_without_replacement(rng, std::span<const NodeId>(all), sample_sources);
        out.diameter_is_lower_bound = true;
    } else {
        sources.resize(n);
        for (NodeId v = 0; v < n; ++v) sources[v] = v;
    }
    out.sources = sources.size();

    const Csr csr = Csr::build(g);
    const unsigned workers = resolve_threads(threads);
    std::vector<std::uint64_t> sum_partial(workers, 0);
    std::vector<std::uint32_t> ecc_partial(workers, 0);

    parallel_blocks(sources.size(), workers,
                    [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
                        BfsScratch scratch;
                        std::uint64_t sum = 0;
                        std::uint32_t ecc = 0;
                        for (std::uint64_t i = begin; i < end; ++i) {
                            const auto [s, e] = bfs_sweep(csr, n, sources[i], scratch);
                            sum += s;
                            ecc = std::max(ecc, e);
                        }
                        sum_partial[w] = sum;
                        ecc_partial[w] = ecc;
                    });

    std::uint64_t dist_sum = 0;
    std::uint32_t diameter = 0;
    for (unsigned w = 0; w < workers; ++w) {
        dist_sum += sum_partial[w];
        diameter = std::max(diameter, ecc_partial[w]);
    }

    out.mean = static_cast<double>(dist_sum) /
               (static_cast<double>(out.sources) * static_cast<double>(n - 1));
    out.diameter = diameter;
    return out;
}

std::optional<double> degree_assortativity(const TemporalGraph& g) {
    if (g.edge_count() == 0)
        throw invalid_parameter("degree_assortativity: graph has no edges");
    const std::uint32_t n = g.node_count();

    std::vector<std::uint32_t> degree(n);
    for (NodeId v = 0; v < n; ++v) degree[v] = g.degree(v);

    // Over the 2m directed pairs (u, v): x = deg u, y = deg v. By symmetry
    // sum(x) = sum(y) = sum_v deg^2 and sum(x^2) = sum(y^2) = sum_v deg^3.
    using i128 = __int128;
    i128 sum_x = 0;
    i128 sum_xx = 0;
    i128 sum_xy = 0;
    const std::span<const std::uint32_t> degrees(degree);
    for (NodeId v = 0; v < n; ++v) {
        const i128 d = degree[v];
        sum_x += d * d;
        sum_xx += d * d * d;
        sum_xy += d * static_cast<i128>(kernels::sum_gather_u32(degrees, g.neighbors(v)));
    }

    const i128 pairs = static_cast<i128>(2 * g.edge_count());
    const i128 cov = pairs * sum_xy - sum_x * sum_x;
    const i128 var = pairs * sum_xx - sum_x * sum_x;
    if (var == 0) return std::nullopt;
    return static_cast<double>(static_cast<long double>(cov) / static_cast<long double>(var));
}

InteractionStats interaction_stats(std::span<const Interaction> log) {
    if (log.empty()) throw invalid_parameter("interaction_stats: empty log");

    std::uint32_t node_count = 0;
    for (const Interaction& i : log)
        for (NodeId v : i.participants()) node_count = std::max(node_count, v + 1);

    std::vector<std::uint32_t> per_node(node_count, 0);
    std::uint64_t growth = 0;
    std::uint64_t growth_participants = 0;
    for (const Interaction& i : log) {
        for (NodeId v : i.participants()) ++per_node[v];
        if (i.t != 0) {
            ++growth;
            growth_participants += i.size();
        }
    }

    InteractionStats out;
    out.growth_interactions = growth;
    out.mean_per_node = static_cast<double>(kernels::sum_u32(per_node)) /
                        static_cast<double>(node_count);
    if (growth > 0)
        out.mean_size = static_cast<double>(growth_participants) / static_cast<double>(growth);
    return out;
}

MetricsReport compute_metrics(const TemporalGraph& g, const MetricsOptions& options) {
    MetricsReport r;
    r.n = g.node_count();
    r.m = g.edge_count();
    r.component_count = g.component_count();
    if (r.n == 0) return r;

    r.mean_degree = 2.0 * static_cast<double>(r.m) / static_cast<double>(r.n);
    r.density = r.n < 2 ? 0.0
                        : 2.0 * static_cast<double>(r.m) /
                              (static_cast<double>(r.n) * static_cast<double>(r.n - 1));
    r.mean_edge_weight =
        r.m == 0 ? 0.0
                 : static_cast<double>(g.total_edge_weight()) / static_cast<double>(r.m);

    const ClusteringStats cc = clustering_stats(g, options.threads);
    r.global_cc = cc.global_cc;
    r.mean_local_cc = cc.mean_local_cc;

    if (r.m > 0) r.assortativity = degree_assortativity(g);

    if (r.component_count == 1) {
        const PathMode mode = options.path_mode.value_or(
            r.n <= options.exact_node_limit ? PathMode::exact : PathMode::sampled);
        const PathStats paths = shortest_path_stats(g, mode, options.sample_sources,
                                                    options.seed, options.threads);
        r.mean_shortest_path = paths.mean;
        r.diameter = paths.diameter;
        r.diameter_is_lower_bound = paths.diameter_is_lower_bound;
    }
    return r;
}

nlohmann::json metrics_to_json(const MetricsReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["mean_degree"] = r.mean_degree;
    j["density"] = r.density;
    j["mean_edge_weight"] = r.mean_edge_weight;
    j["global_cc"] = r.global_cc;
    j["mean_local_cc"] = r.mean_local_cc;
    j["mean_shortest_path"] =
        r.mean_shortest_path ? nlohmann::json(*r.mean_shortest_path) : nlohmann::json();
    j["diameter"] = r.diameter ? nlohmann::json(*r.diameter) : nlohmann::json();
    j["diameter_is_lower_bound"] = r.diameter_is_lower_bound;
    j["assortativity"] = r.assortativity ? nlohmann::json(*r.assortativity) : nlohmann::json();
    j["component_count"] = r.component_count;
    return j;
}

}  // namespace lambda3
