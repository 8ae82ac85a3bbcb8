#pragma once

// The three reproduction experiments: ensemble statistics over seeded runs,
// property-evolution snapshots during a single growth run, and the
// creation-order correlation study. Reports are written as CSV tables shaped
// like the reference result tables, plus a JSON variant with the same fields.
// Infomap columns (com_IM, Q_IM) are reported as not-applicable.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lambda3/generator.hpp"
#include "lambda3/metrics.hpp"

namespace lambda3 {

struct SettingPreset {
    std::string name;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
};

/// The three published settings: setting1 = [1.6, 0.35, 0.05],
/// setting2 = [3, 6, 1], setting3 = [0.45, 0.45, 0.1].
std::span<const SettingPreset> paper_presets();
const SettingPreset* find_preset(std::string_view name);

struct RunResult {
    std::uint64_t seed = 0;
    MetricsReport metrics;
    InteractionStats interactions;
    std::uint32_t communities = 0;
    double louvain_modularity = 0.0;
};

struct EnsembleOptions {
    std::uint32_t n_target = 10000;
    std::uint32_t runs = 20;
    std::uint64_t base_seed = 12345;
    unsigned threads = 0;
    MetricsOptions metrics;
};

struct EnsembleColumn {
    std::string name;
    double mean = 0.0;
    double sd = 0.0;                // n-1 denominator
    std::uint32_t defined_runs = 0; // runs where the metric was defined
};

struct EnsembleReport {
    SettingPreset preset;
    std::uint32_t n_target = 0;
    std::vector<RunResult> runs;  // run i used seed base_seed + i
    std::vector<EnsembleColumn> columns;
};

/// Generates `runs` networks with seeds base_seed+0..runs-1, computes the
/// metrics report, interaction statistics and a Louvain partition for each,
/// and aggregates per-column mean/sd. Runs execute in parallel; aggregation
/// order is fixed by run index.
EnsembleReport run_ensemble(const SettingPreset& preset, const EnsembleOptions& options);

const EnsembleColumn* find_column(const EnsembleReport& report, std::string_view name);

struct EvolutionRow {
    std::uint32_t threshold = 0;
    std::uint64_t interactions_applied = 0;  // growth interactions so far
    MetricsReport metrics;
    std::uint32_t communities = 0;
    double louvain_modularity = 0.0;
};

/// Single growth run paused at the first interaction where the node count
/// reaches each threshold; metrics are measured on the paused graph without
/// touching the generator's variate stream. Thresholds must be strictly
/// increasing; the last one is the run's target size.
std::vector<EvolutionRow> run_evolution(const SettingPreset& preset,
                                        std::span<const std::uint32_t> schedule,
                                        std::uint64_t seed, unsigned threads = 0);

struct CorrelationReport {
    std::uint64_t n = 0;
    std::optional<double> id_degree;            // rho(Id, k)
    std::optional<double> id_interactions;      // rho(Id, i)
    std::optional<double> degree_interactions;  // rho(k, i)
};

/// Pearson correlations over all nodes between creation id, degree and
/// interaction count for one generated network (N >= 1000).
CorrelationReport run_correlations(const SettingPreset& preset, std::uint32_t n_target,
                                   std::uint64_t seed);

// Report serialization (CSV layout mirrors the result tables).
void write_ensemble_csv(const EnsembleReport& report, const std::filesystem::path& path);
nlohmann::json ensemble_to_json(const EnsembleReport& report);
void write_evolution_csv(std::span<const EvolutionRow> rows, const std::filesystem::path& path);
nlohmann::json evolution_to_json(std::span<const EvolutionRow> rows);
void write_correlations_csv(const CorrelationReport& report, const SettingPreset& preset,
                            const std::filesystem::path& path);
nlohmann::json correlations_to_json(const CorrelationReport& report,
                                    const SettingPreset& preset);

}  // namespace lambda3
