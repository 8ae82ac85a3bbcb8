#pragma once

// Publication-stream analysis on generic record streams: month assignment,
// the existing-author and main-author rules, co-author group classification,
// co-author count histograms with a Poisson fit, and co-authorship network
// construction.
//
// Existence is month-granular: an author is "existing" at month T iff they
// appeared in at least one publication (retained or dropped) in any strictly
// earlier month. Records inside the same month are classified against the
// state at the start of that month, in input order.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lambda3/graph.hpp"
#include "lambda3/stats.hpp"

namespace lambda3 {

struct PublicationRecord {
    std::int32_t year = 0;
    std::optional<std::uint8_t> month;  // 1..12
    std::vector<std::string> authors;   // ordered, no duplicates
};

struct ClassifiedPublication {
    std::uint64_t record_index = 0;  // position in the input stream
    std::string main_author;
    std::vector<std::string> prior_coauthors;        // group 1: co-published with main before
    std::vector<std::string> existing_non_coauthors; // group 2: existing, never with main
    std::vector<std::string> new_authors;            // group 3: no earlier publication

    std::size_t coauthor_count() const {
        return prior_coauthors.size() + existing_non_coauthors.size() + new_authors.size();
    }
};

/// Fills absent months uniformly from 1..12 with the seeded stream; present
/// months are untouched. Throws on invalid month values.
void assign_months(std::vector<PublicationRecord>& records, std::uint64_t seed);

struct ClassifyResult {
    std::vector<ClassifiedPublication> classified;
    std::uint64_t dropped_count = 0;
};

/// Classifies a stream sorted by (year, month). Records with no existing
/// author are dropped (but still confer existence and co-authorship history
/// for later months). Throws on unsorted input or missing months.
ClassifyResult classify_stream(std::span<const PublicationRecord> records);

struct CoauthorHistogram {
    std::map<std::uint32_t, std::uint64_t> counts;  // co-author count -> publications
    double lambda_hat = 0.0;                        // mean co-author count
    std::uint64_t publications = 0;

    struct AuthorHistogram {
        std::string author;
        std::uint64_t publications = 0;  // in the main-author role
        std::map<std::uint32_t, std::uint64_t> counts;
    };
    std::vector<AuthorHistogram> top_authors;  // by main-role publications, ties by name
};

/// Histogram of co-author counts over retained publications plus per-author
/// histograms for the top_k most frequent main authors. Throws when empty.
CoauthorHistogram coauthor_histogram(std::span<const ClassifiedPublication> classified,
                                     std::uint32_t top_k = 15);

struct PoissonFitRow {
    std::uint32_t k = 0;
    std::uint64_t observed = 0;
    double observed_freq = 0.0;
    double expected_freq = 0.0;  // pmf(k; lambda_hat)
    double observed_cumulative = 0.0;
    double expected_cumulative = 0.0;
};

struct PoissonFitReport {
    double lambda = 0.0;
    std::vector<PoissonFitRow> rows;  // k = 0 .. max observed
    stats::ChiSquareResult chi_square;
};

PoissonFitReport poisson_fit_report(const CoauthorHistogram& histogram);

/// Co-authorship network over every record (retained or not): each
/// publication becomes a clique, edge weight = co-authored papers, node ids
/// in first-appearance order. Returns the graph and the author id mapping.
struct CoauthorshipNetwork {
    TemporalGraph graph;
    std::vector<std::string> author_names;  // index = node id
};

CoauthorshipNetwork build_coauthorship_network(std::span<const PublicationRecord> records);

/// CSV with header `year,month,authors`; authors is a |-separated ordered
/// list, empty month means absent.
std::vector<PublicationRecord> read_publication_csv(const std::filesystem::path& path);

void write_classified_csv(std::span<const ClassifiedPublication> classified,
                          const std::filesystem::path& path);
void write_histogram_csv(const CoauthorHistogram& histogram, const std::filesystem::path& path);
void write_top_author_csv(const CoauthorHistogram& histogram, const std::filesystem::path& path);
void write_fit_report_csv(const PoissonFitReport& report, const std::filesystem::path& path);

}  // namespace lambda3
