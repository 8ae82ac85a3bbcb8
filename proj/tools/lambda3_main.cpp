// lambda3 - command line front end for the 3-lambda network model toolkit.
//
// Subcommands: generate, metrics, communities, ingest, ensemble, evolve,
// correlate. All randomness is seeded (--seed, default 12345); identical
// flags produce byte-identical outputs. --threads caps worker threads
// (LAMBDA3_THREADS works too); exit code 2 = bad flags, 1 = runtime error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "lambda3/collab.hpp"
#include "lambda3/community.hpp"
#include "lambda3/errors.hpp"
#include "lambda3/experiments.hpp"
#include "lambda3/generator.hpp"
#include "lambda3/graph_io.hpp"
#include "lambda3/kernels.hpp"
#include "lambda3/metrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

void write_json_file(const json& j, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lambda3::parse_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
}

void write_distribution_csv(const std::map<std::uint32_t, std::uint64_t>& dist,
                            const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lambda3::parse_error("cannot open " + path.string() + " for writing");
    out << "value,count\n";
    for (const auto& [value, count] : dist) out << value << ',' << count << '\n';
}

json interactions_json(const lambda3::InteractionStats& stats) {
    return json{
        {"I", stats.growth_interactions},
        {"mean_interactions", stats.mean_per_node},
        {"mean_interaction_size",
         stats.mean_size ? json(*stats.mean_size) : json()},
    };
}

struct GenerateArgs {
    std::uint32_t nodes = 0;
    double l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::string out = ".";
};

int cmd_generate(const GenerateArgs& args) {
    lambda3::GeneratorConfig cfg;
    cfg.n_target = args.nodes;
    cfg.lambda1 = args.l1;
    cfg.lambda2 = args.l2;
    cfg.lambda3 = args.l3;
    cfg.seed = args.seed;

    const lambda3::GenerationResult result = lambda3::generate(cfg);

    const fs::path out_dir(args.out);
    fs::create_directories(out_dir);
    lambda3::write_edge_csv(result.graph, out_dir / "edges.csv");
    lambda3::write_interaction_log(result.log, out_dir / "interactions.jsonl");

    lambda3::MetricsOptions metrics_options;
    metrics_options.seed = args.seed;
    metrics_options.threads = args.threads;
    const lambda3::MetricsReport metrics = lambda3::compute_metrics(result.graph, metrics_options);

    json summary;
    summary["config"] = {
        {"n_target", cfg.n_target}, {"lambda1", cfg.lambda1}, {"lambda2", cfg.lambda2},
        {"lambda3", cfg.lambda3},   {"seed", cfg.seed},
    };
    summary["metrics"] = lambda3::metrics_to_json(metrics);
    summary["interactions"] = interactions_json(lambda3::interaction_stats(result.log));
    write_json_file(summary, out_dir / "summary.json");

    std::cout << "generated " << result.graph.node_count() << " nodes, "
              << result.graph.edge_count() << " edges, " << result.log.size() - 1
              << " growth interactions -> " << out_dir.string() << "\n";
    return 0;
}

struct MetricsArgs {
    std::string input;
    bool exact = false;
    std::uint32_t sample = 0;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::string out = ".";
};

int cmd_metrics(const MetricsArgs& args) {
    const lambda3::TemporalGraph g = lambda3::read_edge_csv(fs::path(args.input));

    lambda3::MetricsOptions options;
    options.seed = args.seed;
    options.threads = args.threads;
    if (args.exact) options.path_mode = lambda3::PathMode::exact;
    if (args.sample > 0) {
        options.path_mode = lambda3::PathMode::sampled;
        options.sample_sources = args.sample;
    }

    const lambda3::MetricsReport report = lambda3::compute_metrics(g, options);
    const fs::path out_dir(args.out);
    fs::create_directories(out_dir);
    write_json_file(json{{"metrics", lambda3::metrics_to_json(report)}},
                    out_dir / "report.json");
    write_distribution_csv(lambda3::degree_distribution(g),
                           out_dir / "degree_distribution.csv");

    std::cout << "n=" << report.n << " m=" << report.m << " mean_degree=" << report.mean_degree
              << " mean_local_cc=" << report.mean_local_cc << " -> " << out_dir.string() << "\n";
    return 0;
}

struct CommunitiesArgs {
    std::string input;
    std::uint64_t seed = kDefaultSeed;
    std::string out = ".";
};

int cmd_communities(const CommunitiesArgs& args) {
    const lambda3::TemporalGraph g = lambda3::read_edge_csv(fs::path(args.input));
    const lambda3::Partition partition = lambda3::louvain(g, args.seed);

    const fs::path out_dir(args.out);
    fs::create_directories(out_dir);
    {
        std::ofstream out(out_dir / "partition.csv", std::ios::binary);
        if (!out) throw lambda3::parse_error("cannot open partition.csv for writing");
        out << "node,community\n";
        for (std::size_t v = 0; v < partition.assignment.size(); ++v)
            out << v << ',' << partition.assignment[v] << '\n';
    }
    {
        std::ofstream out(out_dir / "community_sizes.csv", std::ios::binary);
        if (!out) throw lambda3::parse_error("cannot open community_sizes.csv for writing");
        out << "size,count\n";
        for (const auto& [size, count] : lambda3::community_size_distribution(partition))
            out << size << ',' << count << '\n';
    }

    json summary;
    summary["com_L"] = partition.community_count;
    summary["Q_L"] = g.edge_count() > 0 ? json(lambda3::modularity(g, partition)) : json();
    summary["com_IM"] = nullptr;  // Infomap not implemented
    summary["Q_IM"] = nullptr;
    write_json_file(summary, out_dir / "communities.json");

    std::cout << partition.community_count << " communities -> " << out_dir.string() << "\n";
    return 0;
}

struct IngestArgs {
    std::string input;
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t top_authors = 15;
    std::string out = ".";
};

int cmd_ingest(const IngestArgs& args) {
    std::vector<lambda3::PublicationRecord> records =
        lambda3::read_publication_csv(fs::path(args.input));
    lambda3::assign_months(records, args.seed);
    std::stable_sort(records.begin(), records.end(),
                     [](const lambda3::PublicationRecord& a, const lambda3::PublicationRecord& b) {
                         return std::make_pair(a.year, *a.month) <
                                std::make_pair(b.year, *b.month);
                     });

    const lambda3::ClassifyResult classified = lambda3::classify_stream(records);
    const fs::path out_dir(args.out);
    fs::create_directories(out_dir);

    lambda3::write_classified_csv(classified.classified, out_dir / "classified.csv");

    json summary;
    summary["records"] = records.size();
    summary["retained"] = classified.classified.size();
    summary["dropped"] = classified.dropped_count;

    if (!classified.classified.empty()) {
        const lambda3::CoauthorHistogram histogram =
            lambda3::coauthor_histogram(classified.classified, args.top_authors);
        lambda3::write_histogram_csv(histogram, out_dir / "histogram.csv");
        lambda3::write_top_author_csv(histogram, out_dir / "top_author_histograms.csv");
        const lambda3::PoissonFitReport fit = lambda3::poisson_fit_report(histogram);
        lambda3::write_fit_report_csv(fit, out_dir / "fit_report.csv");
        summary["lambda_hat"] = histogram.lambda_hat;
        summary["chi_square"] = fit.chi_square.statistic;
        summary["chi_square_dof"] = fit.chi_square.dof;
        summary["chi_square_p_value"] = fit.chi_square.p_value;
    }

    const lambda3::CoauthorshipNetwork network = lambda3::build_coauthorship_network(records);
    lambda3::write_edge_csv(network.graph, out_dir / "edges.csv");
    {
        std::ofstream out(out_dir / "authors.csv", std::ios::binary);
        if (!out) throw lambda3::parse_error("cannot open authors.csv for writing");
        out << "node,author\n";
        for (std::size_t v = 0; v < network.author_names.size(); ++v)
            out << v << ',' << network.author_names[v] << '\n';
    }
    summary["network_nodes"] = network.graph.node_count();
    summary["network_edges"] = network.graph.edge_count();
    write_json_file(summary, out_dir / "ingest.json");

    std::cout << "classified " << classified.classified.size() << " publications ("
              << classified.dropped_count << " dropped) -> " << out_dir.string() << "\n";
    return 0;
}

struct SettingArgs {
    std::string preset;
    std::optional<double> l1, l2, l3;

    lambda3::SettingPreset resolve() const {
        if (!preset.empty()) {
            const lambda3::SettingPreset* p = lambda3::find_preset(preset);
            if (!p) {
                throw CLI::ValidationError("--preset",
                                           "unknown preset '" + preset +
                                               "' (expected setting1, setting2 or setting3)");
            }
            return *p;
        }
        if (!l2)
            throw CLI::ValidationError("--l2", "either --preset or --l2 must be given");
        return lambda3::SettingPreset{"custom", l1.value_or(0.0), *l2, l3.value_or(0.0)};
    }
};

void add_setting_options(CLI::App* cmd, SettingArgs& args) {
    auto* preset = cmd->add_option("--preset", args.preset,
                                   "Named setting: setting1, setting2 or setting3");
    auto* l1 = cmd->add_option("--l1", args.l1, "lambda1 (neighbors)");
    auto* l2 = cmd->add_option("--l2", args.l2, "lambda2 (newbies)");
    auto* l3 = cmd->add_option("--l3", args.l3, "lambda3 (new connections)");
    preset->excludes(l1)->excludes(l2)->excludes(l3);
}

struct EnsembleArgs {
    SettingArgs setting;
    std::uint32_t nodes = 10000;
    std::uint32_t runs = 20;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::string out = ".";
};

int cmd_ensemble(const EnsembleArgs& args) {
    const lambda3::SettingPreset preset = args.setting.resolve();
    lambda3::EnsembleOptions options;
    options.n_target = args.nodes;
    options.runs = args.runs;
    options.base_seed = args.seed;
    options.threads = args.threads;

    const lambda3::EnsembleReport report = lambda3::run_ensemble(preset, options);
    const fs::path out_dir(args.out);
    fs::create_directories(out_dir);
    lambda3::write_ensemble_csv(report, out_dir / "report.csv");
    write_json_file(lambda3::ensemble_to_json(report), out_dir / "report.json");

    const lambda3::EnsembleColumn* k = lambda3::find_column(report, "mean_degree");
    std::cout << report.runs.size() << " runs, mean degree " << (k ? k->mean : 0.0) << " -> "
              << out_dir.string() << "\n";
    return 0;
}

struct EvolveArgs {
    SettingArgs setting;
    std::vector<std::uint32_t> thresholds{10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000};
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::string out = ".";
};

int cmd_evolve(const EvolveArgs& args) {
    const lambda3::SettingPreset preset = args.setting.resolve();
    const std::vector<lambda3::EvolutionRow> rows =
        lambda3::run_evolution(preset, args.thresholds, args.seed, args.threads);

    const fs::path out_dir(args.out);
    fs::create_directories(out_dir);
    lambda3::write_evolution_csv(rows, out_dir / "evolution.csv");
    write_json_file(lambda3::evolution_to_json(rows), out_dir / "evolution.json");

    std::cout << rows.size() << " snapshots -> " << out_dir.string() << "\n";
    return 0;
}

struct CorrelateArgs {
    SettingArgs setting;
    std::uint32_t nodes = 100000;
    std::uint64_t seed = kDefaultSeed;
    std::string out = ".";
};

int cmd_correlate(const CorrelateArgs& args) {
    const lambda3::SettingPreset preset = args.setting.resolve();
    const lambda3::CorrelationReport report =
        lambda3::run_correlations(preset, args.nodes, args.seed);

    const fs::path out_dir(args.out);
    fs::create_directories(out_dir);
    lambda3::write_correlations_csv(report, preset, out_dir / "correlations.csv");
    write_json_file(lambda3::correlations_to_json(report, preset),
                    out_dir / "correlations.json");

    std::cout << "correlations over " << report.n << " nodes -> " << out_dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-lambda collaborative network model: generator, metrics, experiments"};
    app.require_subcommand(1);

    bool force_scalar = false;
    app.add_flag("--force-scalar", force_scalar,
                 "Use scalar reference kernels instead of the SIMD variants");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "Generate a network (Algorithm 1)");
    generate->add_option("-N,--nodes", generate_args.nodes, "Target node count")->required();
    generate->add_option("--l1", generate_args.l1, "lambda1 (neighbors)");
    generate->add_option("--l2", generate_args.l2, "lambda2 (newbies)")->required();
    generate->add_option("--l3", generate_args.l3, "lambda3 (new connections)");
    generate->add_option("--seed", generate_args.seed, "RNG seed (default 12345)");
    generate->add_option("--threads", generate_args.threads, "Worker thread cap (0 = auto)");
    generate->add_option("-o,--output", generate_args.out, "Output directory");

    MetricsArgs metrics_args;
    auto* metrics = app.add_subcommand("metrics", "Structural metrics of an edge list");
    metrics->add_option("-i,--input", metrics_args.input, "edges.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    metrics->add_flag("--exact", metrics_args.exact, "Exact all-pairs shortest paths");
    metrics->add_option("--sample", metrics_args.sample,
                        "Sampled shortest paths with this many sources");
    metrics->add_option("--seed", metrics_args.seed, "Seed for sampled-source selection");
    metrics->add_option("--threads", metrics_args.threads, "Worker thread cap (0 = auto)");
    metrics->add_option("-o,--output", metrics_args.out, "Output directory");

    CommunitiesArgs communities_args;
    auto* communities = app.add_subcommand("communities", "Louvain community detection");
    communities->add_option("-i,--input", communities_args.input, "edges.csv input")
        ->required()
        ->check(CLI::ExistingFile);
    communities->add_option("--seed", communities_args.seed, "RNG seed (default 12345)");
    communities->add_option("-o,--output", communities_args.out, "Output directory");

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand("ingest", "Publication-stream analysis");
    ingest->add_option("-i,--input", ingest_args.input, "year,month,authors CSV")
        ->required()
        ->check(CLI::ExistingFile);
    ingest->add_option("--seed", ingest_args.seed, "Seed for random month assignment");
    ingest->add_option("--top-authors", ingest_args.top_authors,
                       "Per-author histograms for the top K main authors");
    ingest->add_option("-o,--output", ingest_args.out, "Output directory");

    EnsembleArgs ensemble_args;
    auto* ensemble = app.add_subcommand("ensemble", "Ensemble statistics over seeded runs");
    add_setting_options(ensemble, ensemble_args.setting);
    ensemble->add_option("-N,--nodes", ensemble_args.nodes, "Target node count per run");
    ensemble->add_option("--runs", ensemble_args.runs, "Number of runs");
    ensemble->add_option("--seed", ensemble_args.seed, "Base seed; run i uses seed+i");
    ensemble->add_option("--threads", ensemble_args.threads, "Worker thread cap (0 = auto)");
    ensemble->add_option("-o,--output", ensemble_args.out, "Output directory");

    EvolveArgs evolve_args;
    auto* evolve = app.add_subcommand("evolve", "Property snapshots during one growth run");
    add_setting_options(evolve, evolve_args.setting);
    evolve->add_option("--thresholds", evolve_args.thresholds,
                       "Node-count snapshot thresholds (strictly increasing)")
        ->delimiter(',');
    evolve->add_option("--seed", evolve_args.seed, "RNG seed (default 12345)");
    evolve->add_option("--threads", evolve_args.threads, "Worker thread cap (0 = auto)");
    evolve->add_option("-o,--output", evolve_args.out, "Output directory");

    CorrelateArgs correlate_args;
    auto* correlate = app.add_subcommand("correlate", "Creation-order correlation study");
    add_setting_options(correlate, correlate_args.setting);
    correlate->add_option("-N,--nodes", correlate_args.nodes, "Target node count");
    correlate->add_option("--seed", correlate_args.seed, "RNG seed (default 12345)");
    correlate->add_option("-o,--output", correlate_args.out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (force_scalar) lambda3::kernels::force_isa(lambda3::kernels::Isa::scalar);
        if (generate->parsed()) return cmd_generate(generate_args);
        if (metrics->parsed()) return cmd_metrics(metrics_args);
        if (communities->parsed()) return cmd_communities(communities_args);
        if (ingest->parsed()) return cmd_ingest(ingest_args);
        if (ensemble->parsed()) return cmd_ensemble(ensemble_args);
        if (evolve->parsed()) return cmd_evolve(evolve_args);
        if (correlate->parsed()) return cmd_correlate(correlate_args);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
