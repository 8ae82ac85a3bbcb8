#include <doctest.h>

#include <random>

#include "lambda3/generator.hpp"
#include "lambda3/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using lambda3::PathMode;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("degree distribution on fixtures") {
    const auto k3 = lambda3::degree_distribution(fixtures::complete_graph(3));
    CHECK(k3 == std::map<std::uint32_t, std::uint64_t>{{2, 3}});

    const auto star = lambda3::degree_distribution(fixtures::star_graph(4));
    CHECK(star == std::map<std::uint32_t, std::uint64_t>{{1, 4}, {4, 1}});

    const auto p4 = lambda3::degree_distribution(fixtures::path_graph(4));
    CHECK(p4 == std::map<std::uint32_t, std::uint64_t>{{1, 2}, {2, 2}});

    std::uint64_t total = 0;
    for (const auto& [deg, count] : star) total += count;
    CHECK(total == 5);
}

TEST_CASE("clustering coefficients on fixtures") {
    CHECK(lambda3::global_clustering(fixtures::complete_graph(3)) == doctest::Approx(1.0));
    CHECK(lambda3::global_clustering(fixtures::path_graph(3)) == doctest::Approx(0.0));
    CHECK(lambda3::mean_local_clustering(fixtures::complete_graph(3)) == doctest::Approx(1.0));
    CHECK(lambda3::mean_local_clustering(fixtures::star_graph(4)) == doctest::Approx(0.0));

    // K4 minus one edge: 2 triangles over 8 connected triples -> 0.75.
    const auto diamond = fixtures::from_pairs({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(oracles::triangle_count_oracle(diamond) == 2);
    CHECK(oracles::triple_count_oracle(diamond) == 8);
    CHECK(lambda3::global_clustering(diamond) == doctest::Approx(0.75));
}

TEST_CASE("clustering agrees with the brute-force oracle on 200 random graphs") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> prob(0.1, 0.9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 7);  // up to 8 nodes
        const auto g = fixtures::random_graph(n, prob(rng), rng);
        CHECK(lambda3::global_clustering(g) ==
              doctest::Approx(oracles::global_clustering_oracle(g)).epsilon(1e-12));
        CHECK(lambda3::mean_local_clustering(g) ==
              doctest::Approx(oracles::mean_local_clustering_oracle(g)).epsilon(1e-12));
    }
}

TEST_CASE("shortest paths on fixtures") {
    const auto k5 = lambda3::shortest_path_stats(fixtures::complete_graph(5), PathMode::exact);
    CHECK(k5.mean == doctest::Approx(1.0));
    CHECK(k5.diameter == 1);

    const auto p3 = lambda3::shortest_path_stats(fixtures::path_graph(3), PathMode::exact);
    CHECK(p3.mean == doctest::Approx(4.0 / 3.0));
    CHECK(p3.diameter == 2);
}

TEST_CASE("disconnected graphs raise an error naming the component count") {
    const auto g = fixtures::from_pairs({{0, 1}, {2, 3}}, 4);
    CHECK_THROWS_AS(lambda3::shortest_path_stats(g, PathMode::exact),
                    lambda3::disconnected_graph);
    try {
        lambda3::shortest_path_stats(g, PathMode::exact);
    } catch (const lambda3::disconnected_graph& ex) {
        CHECK(ex.component_count == 2);
    }
}

TEST_CASE("exact path stats agree with Floyd-Warshall on random connected graphs") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t n = 5 + static_cast<std::uint32_t>(rng() % 46);  // up to 50
        const auto g = fixtures::random_connected_graph(n, 0.08, rng);
        const auto mine = lambda3::shortest_path_stats(g, PathMode::exact);
        const auto oracle = oracles::path_stats_oracle(g);
        REQUIRE(oracle.connected);
        CHECK(mine.mean == doctest::Approx(oracle.mean).epsilon(1e-12));
        CHECK(mine.diameter == oracle.diameter);
    }
}

TEST_CASE("sampled mode estimates the mean and bounds the diameter") {
    std::mt19937_64 rng(2);
    const auto g = fixtures::random_connected_graph(200, 0.02, rng);
    const auto exact = lambda3::shortest_path_stats(g, PathMode::exact);
    const auto sampled = lambda3::shortest_path_stats(g, PathMode::sampled, 50, 99);
    CHECK(sampled.diameter_is_lower_bound);
    CHECK(sampled.diameter <= exact.diameter);
    CHECK(sampled.mean == doctest::Approx(exact.mean).epsilon(0.25));
    // Requesting at least n sources falls back to the exact sweep.
    const auto full = lambda3::shortest_path_stats(g, PathMode::sampled, 500, 99);
    CHECK_FALSE(full.diameter_is_lower_bound);
    CHECK(full.mean == doctest::Approx(exact.mean).epsilon(1e-12));
}

TEST_CASE("assortativity on fixtures") {
    // Star: hub degree pairs perfectly anti-correlated.
    const auto star = fixtures::star_graph(3);
    const auto r = lambda3::degree_assortativity(star);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx(-1.0));

    // Regular graphs have zero degree variance.
    CHECK_FALSE(lambda3::degree_assortativity(fixtures::cycle_graph(5)).has_value());

    CHECK_THROWS_AS(lambda3::degree_assortativity(fixtures::from_pairs({}, 3)),
                    lambda3::invalid_parameter);
}

TEST_CASE("assortativity agrees with the direct Pearson oracle") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t n = 4 + static_cast<std::uint32_t>(rng() % 30);
        const auto g = fixtures::random_connected_graph(n, 0.15, rng);
        const auto mine = lambda3::degree_assortativity(g);
        const auto oracle = oracles::assortativity_oracle(g);
        REQUIRE(mine.has_value() == oracle.has_value());
        if (mine) CHECK(*mine == doctest::Approx(*oracle).epsilon(1e-9));
    }
}

TEST_CASE("assortativity is invariant under node relabeling") {
    std::mt19937_64 rng(161803);
    const auto g = fixtures::random_connected_graph(40, 0.1, rng);

    // Random permutation applied to the edge list.
    std::vector<std::uint32_t> perm(g.node_count());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
        for (const auto u : g.neighbors(v))
            if (u > v) pairs.emplace_back(perm[v], perm[u]);
    const auto relabeled = fixtures::from_pairs(pairs, g.node_count());

    const auto a = lambda3::degree_assortativity(g);
    const auto b = lambda3::degree_assortativity(relabeled);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
}

TEST_CASE("interaction stats on a genesis-only log") {
    std::vector<lambda3::Interaction> log(1);
    log[0].t = 0;
    log[0].proactive = 0;
    log[0].newbies = {1};
    const auto stats = lambda3::interaction_stats(log);
    CHECK(stats.growth_interactions == 0);
    CHECK(stats.mean_per_node == doctest::Approx(1.0));
    CHECK_FALSE(stats.mean_size.has_value());
}

TEST_CASE("interaction stats count growth interactions and participants") {
    lambda3::GeneratorConfig cfg;
    cfg.n_target = 200;
    cfg.lambda1 = 1.6;
    cfg.lambda2 = 0.35;
    cfg.lambda3 = 0.05;
    cfg.seed = 55;
    const auto result = lambda3::generate(cfg);
    const auto stats = lambda3::interaction_stats(result.log);
    CHECK(stats.growth_interactions == result.log.size() - 1);
    REQUIRE(stats.mean_size.has_value());

    // Cross-check <i> against the graph counters.
    double total = 0.0;
    for (std::uint32_t v = 0; v < result.graph.node_count(); ++v)
        total += result.graph.node_interactions(v);
    CHECK(stats.mean_per_node ==
          doctest::Approx(total / result.graph.node_count()).epsilon(1e-12));
}

TEST_CASE("report invariants and JSON field names") {
    const auto g = fixtures::complete_graph(4);
    const auto report = lambda3::compute_metrics(g);
    CHECK(report.n == 4);
    CHECK(report.m == 6);
    CHECK(report.mean_degree == doctest::Approx(3.0));
    CHECK(report.mean_degree * static_cast<double>(report.n) ==
          doctest::Approx(2.0 * static_cast<double>(report.m)));
    CHECK(report.density == doctest::Approx(1.0));
    CHECK(report.component_count == 1);
    REQUIRE(report.mean_shortest_path.has_value());
    CHECK(*report.mean_shortest_path == doctest::Approx(1.0));

    const auto j = lambda3::metrics_to_json(report);
    for (const char* key :
         {"n", "m", "mean_degree", "mean_shortest_path", "diameter", "global_cc",
          "mean_local_cc", "assortativity", "density", "component_count", "mean_edge_weight"})
        CHECK(j.contains(key));
    CHECK(j["assortativity"].is_null());  // complete graph is regular
}

TEST_CASE("metrics results are independent of the worker count") {
    lambda3::GeneratorConfig cfg;
    cfg.n_target = 600;
    cfg.lambda1 = 1.6;
    cfg.lambda2 = 0.35;
    cfg.lambda3 = 0.05;
    cfg.seed = 99;
    const auto result = lambda3::generate(cfg);

    lambda3::MetricsOptions one;
    one.threads = 1;
    lambda3::MetricsOptions four;
    four.threads = 4;
    const auto a = lambda3::compute_metrics(result.graph, one);
    const auto b = lambda3::compute_metrics(result.graph, four);
    CHECK(a.mean_local_cc == b.mean_local_cc);  // bit-equal, fixed reduction order
    CHECK(a.global_cc == b.global_cc);
    CHECK(*a.mean_shortest_path == *b.mean_shortest_path);
    CHECK(*a.diameter == *b.diameter);
    CHECK(*a.assortativity == *b.assortativity);
}

TEST_SUITE_END();
