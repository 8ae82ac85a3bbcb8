#include "lambda3/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "lambda3/community.hpp"
#include "lambda3/parallel.hpp"
#include "lambda3/stats.hpp"

namespace lambda3 {

namespace {

const std::array<SettingPreset, 3> kPresets{{
    {"setting1", 1.6, 0.35, 0.05},
    {"setting2", 3.0, 6.0, 1.0},
    {"setting3", 0.45, 0.45, 0.1},
}};

GeneratorConfig config_for(const SettingPreset& preset, std::uint32_t n_target,
                           std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.n_target = n_target;
    cfg.lambda1 = preset.lambda1;
    cfg.lambda2 = preset.lambda2;
    cfg.lambda3 = preset.lambda3;
    cfg.seed = seed;
    return cfg;
}

RunResult analyze_run(const TemporalGraph& graph, std::span<const Interaction> log,
                      std::uint64_t seed, const MetricsOptions& metrics_options) {
    RunResult run;
    run.seed = seed;
    run.metrics = compute_metrics(graph, metrics_options);
    run.interactions = interaction_stats(log);
    const Partition partition = louvain(graph, seed);
    run.communities = partition.community_count;
    run.louvain_modularity = modularity(graph, partition);
    return run;
}

// Fixed column extraction; optional metrics may be undefined for some runs.
struct ColumnSpec {
    const char* name;
    std::optional<double> (*get)(const RunResult&);
};

constexpr std::optional<double> some(double v) { return std::optional<double>(v); }

const std::array<ColumnSpec, 16> kColumns{{
    {"n", [](const RunResult& r) { return some(static_cast<double>(r.metrics.n)); }},
    {"m", [](const RunResult& r) { return some(static_cast<double>(r.metrics.m)); }},
    {"mean_degree", [](const RunResult& r) { return some(r.metrics.mean_degree); }},
    {"mean_shortest_path", [](const RunResult& r) { return r.metrics.mean_shortest_path; }},
    {"diameter",
     [](const RunResult& r) {
         return r.metrics.diameter ? some(static_cast<double>(*r.metrics.diameter))
                                   : std::optional<double>();
     }},
    {"mean_local_cc", [](const RunResult& r) { return some(r.metrics.mean_local_cc); }},
    {"global_cc", [](const RunResult& r) { return some(r.metrics.global_cc); }},
    {"assortativity", [](const RunResult& r) { return r.metrics.assortativity; }},
    {"com_L", [](const RunResult& r) { return some(static_cast<double>(r.communities)); }},
    {"Q_L", [](const RunResult& r) { return some(r.louvain_modularity); }},
    {"I",
     [](const RunResult& r) {
         return some(static_cast<double>(r.interactions.growth_interactions));
     }},
    {"mean_interactions", [](const RunResult& r) { return some(r.interactions.mean_per_node); }},
    {"mean_interaction_size", [](const RunResult& r) { return r.interactions.mean_size; }},
    {"mean_edge_weight", [](const RunResult& r) { return some(r.metrics.mean_edge_weight); }},
    {"density", [](const RunResult& r) { return some(r.metrics.density); }},
    {"component_count",
     [](const RunResult& r) { return some(static_cast<double>(r.metrics.component_count)); }},
}};

std::vector<EnsembleColumn> aggregate_columns(std::span<const RunResult> runs) {
    std::vector<EnsembleColumn> columns;
    columns.reserve(kColumns.size());
    for (const ColumnSpec& spec : kColumns) {
        EnsembleColumn col;
        col.name = spec.name;
        std::vector<double> values;
        values.reserve(runs.size());
        for (const RunResult& run : runs) {
            if (const auto v = spec.get(run)) {
                values.push_back(*v);
                ++col.defined_runs;
            }
        }
        const stats::MeanSd ms = stats::mean_sd(values);
        col.mean = ms.mean;
        col.sd = ms.sd;
        columns.push_back(std::move(col));
    }
    return columns;
}

}  // namespace

std::span<const SettingPreset> paper_presets() { return kPresets; }

const SettingPreset* find_preset(std::string_view name) {
    for (const SettingPreset& p : kPresets)
        if (p.name == name) return &p;
    return nullptr;
}

EnsembleReport run_ensemble(const SettingPreset& preset, const EnsembleOptions& options) {
    if (options.runs < 2) throw invalid_parameter("run_ensemble: need at least 2 runs");

    EnsembleReport report;
    report.preset = preset;
    report.n_target = options.n_target;
    report.runs.resize(options.runs);

    const unsigned workers = resolve_threads(options.threads);
    const unsigned in_flight = std::min<unsigned>(workers, options.runs);
    MetricsOptions per_run_metrics = options.metrics;
    per_run_metrics.threads = std::max(1u, workers / std::max(1u, in_flight));

    parallel_items(options.runs, workers, [&](std::uint64_t i) {
        const std::uint64_t seed = options.base_seed + i;
        try {
            const GenerationResult gen = generate(config_for(preset, options.n_target, seed));
            report.runs[i] = analyze_run(gen.graph, gen.log, seed, per_run_metrics);
        } catch (const std::exception& ex) {
            throw std::runtime_error("run " + std::to_string(i) + " (seed " +
                                     std::to_string(seed) + "): " + ex.what());
        }
    });

    report.columns = aggregate_columns(report.runs);
    return report;
}

const EnsembleColumn* find_column(const EnsembleReport& report, std::string_view name) {
    for (const EnsembleColumn& col : report.columns)
        if (col.name == name) return &col;
    return nullptr;
}

std::vector<EvolutionRow> run_evolution(const SettingPreset& preset,
                                        std::span<const std::uint32_t> schedule,
                                        std::uint64_t seed, unsigned threads) {
    if (schedule.empty()) throw invalid_parameter("run_evolution: empty snapshot schedule");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw invalid_parameter("run_evolution: schedule must be strictly increasing");

    GeneratorSession session(config_for(preset, schedule.back(), seed), /*keep_log=*/false);
    MetricsOptions metrics_options;
    metrics_options.threads = threads;

    std::vector<EvolutionRow> rows;
    std::size_t next = 0;
    std::uint64_t applied = 0;
    const auto snapshot = [&]() {
        // Measuring is read-only; the generator's variate stream is untouched.
        while (next < schedule.size() && session.graph().node_count() >= schedule[next]) {
            EvolutionRow row;
            row.threshold = schedule[next];
            row.interactions_applied = applied;
            row.metrics = compute_metrics(session.graph(), metrics_options);
            const Partition partition = louvain(session.graph(), seed);
            row.communities = partition.community_count;
            row.louvain_modularity = modularity(session.graph(), partition);
            rows.push_back(std::move(row));
            ++next;
        }
    };

    snapshot();  // thresholds already covered by the genesis clique
    while (!session.done()) {
        session.step();
        ++applied;
        snapshot();
    }
    return rows;
}

CorrelationReport run_correlations(const SettingPreset& preset, std::uint32_t n_target,
                                   std::uint64_t seed) {
    if (n_target < 1000) throw invalid_parameter("run_correlations: N must be at least 1000");

    GeneratorSession session(config_for(preset, n_target, seed), /*keep_log=*/false);
    while (!session.done()) session.step();
    const TemporalGraph& g = session.graph();

    const std::uint32_t n = g.node_count();
    std::vector<std::uint32_t> ids(n);
    std::vector<std::uint32_t> degrees(n);
    std::vector<std::uint32_t> interactions(n);
    for (NodeId v = 0; v < n; ++v) {
        ids[v] = v;
        degrees[v] = g.degree(v);
        interactions[v] = g.node_interactions(v);
    }

    CorrelationReport report;
    report.n = n;
    report.id_degree = stats::pearson_u32(ids, degrees);
    report.id_interactions = stats::pearson_u32(ids, interactions);
    report.degree_interactions = stats::pearson_u32(degrees, interactions);
    return report;
}

namespace {

std::ofstream open_report(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open " + path.string() + " for writing");
    return out;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string format_optional(const std::optional<double>& v) {
    return v ? format_value(*v) : "na";
}

nlohmann::json optional_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json();
}

nlohmann::json run_to_json(const RunResult& run) {
    nlohmann::json j;
    j["seed"] = run.seed;
    j["metrics"] = metrics_to_json(run.metrics);
    j["interactions"] = {
        {"I", run.interactions.growth_interactions},
        {"mean_interactions", run.interactions.mean_per_node},
        {"mean_interaction_size", optional_json(run.interactions.mean_size)},
    };
    j["com_L"] = run.communities;
    j["Q_L"] = run.louvain_modularity;
    return j;
}

}  // namespace

void write_ensemble_csv(const EnsembleReport& report, const std::filesystem::path& path) {
    auto out = open_report(path);
    out << "setting,stat";
    for (const EnsembleColumn& col : report.columns) {
        out << ',' << col.name;
        if (col.name == "assortativity") out << ",com_IM";  // placeholder column order
        if (col.name == "com_L") out << ",Q_IM";
    }
    out << '\n';

    const auto emit = [&](const char* stat, bool sd) {
        out << report.preset.name << ',' << stat;
        for (const EnsembleColumn& col : report.columns) {
            if (col.defined_runs == 0)
                out << ",na";
            else
                out << ',' << format_value(sd ? col.sd : col.mean);
            if (col.name == "assortativity") out << ",na";
            if (col.name == "com_L") out << ",na";
        }
        out << '\n';
    };
    emit("mean", false);
    emit("sd", true);
}

nlohmann::json ensemble_to_json(const EnsembleReport& report) {
    nlohmann::json j;
    j["setting"] = {
        {"name", report.preset.name},
        {"lambda1", report.preset.lambda1},
        {"lambda2", report.preset.lambda2},
        {"lambda3", report.preset.lambda3},
    };
    j["n_target"] = report.n_target;
    j["run_count"] = report.runs.size();
    nlohmann::json runs = nlohmann::json::array();
    for (const RunResult& run : report.runs) runs.push_back(run_to_json(run));
    j["runs"] = runs;
    nlohmann::json summary;
    for (const EnsembleColumn& col : report.columns) {
        summary[col.name] = {
            {"mean", col.mean},
            {"sd", col.sd},
            {"defined_runs", col.defined_runs},
        };
    }
    summary["com_IM"] = nullptr;  // Infomap not implemented
    summary["Q_IM"] = nullptr;
    j["summary"] = summary;
    return j;
}

void write_evolution_csv(std::span<const EvolutionRow> rows, const std::filesystem::path& path) {
    auto out = open_report(path);
    out << "threshold,interactions,n,m,mean_degree,mean_shortest_path,diameter,"
           "mean_local_cc,assortativity,com_IM,com_L,Q_IM,Q_L\n";
    for (const EvolutionRow& row : rows) {
        std::optional<double> diameter;
        if (row.metrics.diameter) diameter = static_cast<double>(*row.metrics.diameter);
        std::optional<double> mean_path = row.metrics.mean_shortest_path;
        out << row.threshold << ',' << row.interactions_applied << ',' << row.metrics.n << ','
            << row.metrics.m << ',' << format_value(row.metrics.mean_degree) << ','
            << format_optional(mean_path) << ',' << format_optional(diameter) << ','
            << format_value(row.metrics.mean_local_cc) << ','
            << format_optional(row.metrics.assortativity) << ",na," << row.communities << ",na,"
            << format_value(row.louvain_modularity) << '\n';
    }
}

nlohmann::json evolution_to_json(std::span<const EvolutionRow> rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const EvolutionRow& row : rows) {
        nlohmann::json j;
        j["threshold"] = row.threshold;
        j["interactions"] = row.interactions_applied;
        j["metrics"] = metrics_to_json(row.metrics);
        j["com_L"] = row.communities;
        j["Q_L"] = row.louvain_modularity;
        j["com_IM"] = nullptr;
        j["Q_IM"] = nullptr;
        arr.push_back(std::move(j));
    }
    return arr;
}

void write_correlations_csv(const CorrelationReport& report, const SettingPreset& preset,
                            const std::filesystem::path& path) {
    auto out = open_report(path);
    out << "setting,n,rho_id_degree,rho_id_interactions,rho_degree_interactions\n";
    out << preset.name << ',' << report.n << ',' << format_optional(report.id_degree) << ','
        << format_optional(report.id_interactions) << ','
        << format_optional(report.degree_interactions) << '\n';
}

nlohmann::json correlations_to_json(const CorrelationReport& report,
                                    const SettingPreset& preset) {
    nlohmann::json j;
    j["setting"] = preset.name;
    j["n"] = report.n;
    j["rho_id_degree"] = optional_json(report.id_degree);
    j["rho_id_interactions"] = optional_json(report.id_interactions);
    j["rho_degree_interactions"] = optional_json(report.degree_interactions);
    return j;
}

}  // namespace lambda3
