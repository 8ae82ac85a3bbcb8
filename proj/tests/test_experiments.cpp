#include <doctest.h>

#include "lambda3/experiments.hpp"
#include "lambda3/stats.hpp"

using lambda3::find_preset;
using lambda3::SettingPreset;

TEST_SUITE_BEGIN("experiments");

TEST_CASE("the three paper presets ship with exact lambdas") {
    REQUIRE(lambda3::paper_presets().size() == 3);
    const SettingPreset* s1 = find_preset("setting1");
    REQUIRE(s1 != nullptr);
    CHECK(s1->lambda1 == 1.6);
    CHECK(s1->lambda2 == 0.35);
    CHECK(s1->lambda3 == 0.05);
    const SettingPreset* s2 = find_preset("setting2");
    REQUIRE(s2 != nullptr);
    CHECK(s2->lambda1 == 3.0);
    CHECK(s2->lambda2 == 6.0);
    CHECK(s2->lambda3 == 1.0);
    const SettingPreset* s3 = find_preset("setting3");
    REQUIRE(s3 != nullptr);
    CHECK(s3->lambda1 == 0.45);
    CHECK(s3->lambda2 == 0.45);
    CHECK(s3->lambda3 == 0.1);
    CHECK(find_preset("setting9") == nullptr);
}

TEST_CASE("pearson sanity: perfectly linear vectors") {
    const std::vector<std::uint32_t> x{1, 2, 3};
    const std::vector<std::uint32_t> y{2, 4, 6};
    const auto rho = lambda3::stats::pearson_u32(x, y);
    REQUIRE(rho.has_value());
    CHECK(*rho == doctest::Approx(1.0));

    const std::vector<std::uint32_t> flat{5, 5, 5};
    CHECK_FALSE(lambda3::stats::pearson_u32(x, flat).has_value());
}

TEST_CASE("pearson is shift-invariant") {
    const std::vector<std::uint32_t> x{3, 1, 4, 1, 5, 9, 2, 6};
    const std::vector<std::uint32_t> y{2, 7, 1, 8, 2, 8, 1, 8};
    std::vector<std::uint32_t> x_shifted(x);
    for (auto& v : x_shifted) v += 1000;
    const auto a = lambda3::stats::pearson_u32(x, y);
    const auto b = lambda3::stats::pearson_u32(x_shifted, y);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
}

TEST_CASE("ensemble aggregates per-run statistics") {
    const SettingPreset* preset = find_preset("setting1");
    REQUIRE(preset != nullptr);
    lambda3::EnsembleOptions options;
    options.n_target = 300;
    options.runs = 4;
    options.base_seed = 100;

    const auto report = lambda3::run_ensemble(*preset, options);
    CHECK(report.runs.size() == 4);
    for (std::size_t i = 0; i < report.runs.size(); ++i)
        CHECK(report.runs[i].seed == 100 + i);

    const auto* n = lambda3::find_column(report, "n");
    REQUIRE(n != nullptr);
    CHECK(n->mean >= 300.0);
    CHECK(n->defined_runs == 4);

    const auto* q = lambda3::find_column(report, "Q_L");
    REQUIRE(q != nullptr);
    CHECK(q->mean > 0.0);

    // sd uses the n-1 denominator: recompute for one column.
    std::vector<double> ms;
    for (const auto& run : report.runs) ms.push_back(static_cast<double>(run.metrics.m));
    const auto check = lambda3::stats::mean_sd(ms);
    const auto* m = lambda3::find_column(report, "m");
    REQUIRE(m != nullptr);
    CHECK(m->mean == doctest::Approx(check.mean));
    CHECK(m->sd == doctest::Approx(check.sd));
}

TEST_CASE("ensemble demands at least two runs") {
    lambda3::EnsembleOptions options;
    options.runs = 1;
    CHECK_THROWS_AS(lambda3::run_ensemble(*find_preset("setting1"), options),
                    lambda3::invalid_parameter);
}

TEST_CASE("evolution snapshots appear at each threshold and match a fresh run") {
    const SettingPreset* preset = find_preset("setting1");
    const std::vector<std::uint32_t> schedule{10, 50, 200};
    const auto rows = lambda3::run_evolution(*preset, schedule, 4242);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].threshold == schedule[i]);
        CHECK(rows[i].metrics.n >= schedule[i]);
        CHECK(rows[i].metrics.component_count == 1);
    }
    CHECK(rows[0].metrics.n <= rows[1].metrics.n);
    CHECK(rows[1].metrics.n <= rows[2].metrics.n);

    // Pausing to measure must not perturb the variate stream: the final
    // snapshot equals a fresh uninterrupted run with the same seed.
    lambda3::GeneratorConfig cfg;
    cfg.n_target = 200;
    cfg.lambda1 = preset->lambda1;
    cfg.lambda2 = preset->lambda2;
    cfg.lambda3 = preset->lambda3;
    cfg.seed = 4242;
    const auto fresh = lambda3::generate(cfg);
    CHECK(rows[2].metrics.n == fresh.graph.node_count());
    CHECK(rows[2].metrics.m == fresh.graph.edge_count());
    const auto fresh_metrics = lambda3::compute_metrics(fresh.graph);
    CHECK(rows[2].metrics.mean_local_cc == fresh_metrics.mean_local_cc);
    CHECK(*rows[2].metrics.mean_shortest_path == *fresh_metrics.mean_shortest_path);
}

TEST_CASE("evolution validates its schedule") {
    const SettingPreset* preset = find_preset("setting1");
    CHECK_THROWS_AS(lambda3::run_evolution(*preset, std::vector<std::uint32_t>{}, 1),
                    lambda3::invalid_parameter);
    CHECK_THROWS_AS(
        lambda3::run_evolution(*preset, std::vector<std::uint32_t>{10, 10, 20}, 1),
        lambda3::invalid_parameter);
    CHECK_THROWS_AS(
        lambda3::run_evolution(*preset, std::vector<std::uint32_t>{50, 20}, 1),
        lambda3::invalid_parameter);
}

TEST_CASE("threshold below the genesis size snapshots the genesis clique") {
    // setting2 genesis = 11 nodes; the first snapshot covers thresholds <= 11.
    const SettingPreset* preset = find_preset("setting2");
    const auto rows = lambda3::run_evolution(*preset, std::vector<std::uint32_t>{10, 50}, 9);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].metrics.n == 11);
    CHECK(rows[0].interactions_applied == 0);
    CHECK(rows[0].metrics.density == doctest::Approx(1.0));  // complete genesis clique
}

TEST_CASE("correlations on a scaled-down run have the expected signs") {
    const SettingPreset* preset = find_preset("setting1");
    const auto report = lambda3::run_correlations(*preset, 5000, 33);
    REQUIRE(report.id_degree.has_value());
    REQUIRE(report.id_interactions.has_value());
    REQUIRE(report.degree_interactions.has_value());
    CHECK(*report.id_degree < 0.0);
    CHECK(*report.id_interactions < 0.0);
    CHECK(*report.degree_interactions > 0.5);

    CHECK_THROWS_AS(lambda3::run_correlations(*preset, 100, 1), lambda3::invalid_parameter);
}

TEST_SUITE_END();
