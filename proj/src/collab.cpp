#include "lambda3/collab.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "lambda3/rng.hpp"

namespace lambda3 {

namespace {

std::int64_t month_key(const PublicationRecord& r) {
    if (!r.month) throw invalid_parameter("record has no month; run assign_months first");
    return static_cast<std::int64_t>(r.year) * 12 + (*r.month - 1);
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

void assign_months(std::vector<PublicationRecord>& records, std::uint64_t seed) {
    Rng rng(seed);
    for (PublicationRecord& r : records) {
        if (r.month) {
            if (*r.month < 1 || *r.month > 12)
                throw invalid_parameter("month " + std::to_string(*r.month) + " out of range");
            continue;
        }
        r.month = static_cast<std::uint8_t>(1 + rng.uniform_below(12));
    }
}

ClassifyResult classify_stream(std::span<const PublicationRecord> records) {
    ClassifyResult result;

    std::unordered_map<std::string, std::uint32_t> author_ids;
    const auto id_of = [&](const std::string& name) {
        const auto [it, inserted] =
            author_ids.emplace(name, static_cast<std::uint32_t>(author_ids.size()));
        (void)inserted;
        return it->second;
    };

    std::vector<bool> existing;             // state at the start of the current month
    std::unordered_set<std::uint64_t> coauthored;  // pairs from strictly earlier months

    // Batched updates applied when the month advances.
    std::vector<std::uint32_t> month_authors;
    std::vector<std::uint64_t> month_pairs;
    const auto flush_month = [&]() {
        existing.resize(author_ids.size(), false);
        for (std::uint32_t a : month_authors) existing[a] = true;
        for (std::uint64_t p : month_pairs) coauthored.insert(p);
        month_authors.clear();
        month_pairs.clear();
    };

    std::int64_t current_month = std::numeric_limits<std::int64_t>::min();
    for (std::size_t index = 0; index < records.size(); ++index) {
        const PublicationRecord& r = records[index];
        if (r.authors.empty()) throw invalid_parameter("record has no authors");
        const std::int64_t key = month_key(r);
        if (key < current_month)
            throw invalid_parameter("records not sorted by (year, month) at index " +
                                    std::to_string(index));
        if (key > current_month) {
            flush_month();
            current_month = key;
        }

        std::vector<std::uint32_t> ids;
        ids.reserve(r.authors.size());
        for (const std::string& name : r.authors) ids.push_back(id_of(name));
        {
            std::vector<std::uint32_t> dedup = ids;
            std::sort(dedup.begin(), dedup.end());
            if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
                throw invalid_parameter("duplicate author within one record at index " +
                                        std::to_string(index));
        }
        existing.resize(author_ids.size(), false);

        // Record history applies from the next month on, retained or not.
        month_authors.insert(month_authors.end(), ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                month_pairs.push_back(pair_key(ids[i], ids[j]));

        // Main author: first existing author in co-author order.
        std::size_t main_pos = ids.size();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (existing[ids[i]]) {
                main_pos = i;
                break;
            }
        }
        if (main_pos == ids.size()) {
            ++result.dropped_count;
            continue;
        }

        ClassifiedPublication pub;
        pub.record_index = index;
        pub.main_author = r.authors[main_pos];
        const std::uint32_t main_id = ids[main_pos];
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i == main_pos) continue;
            if (!existing[ids[i]]) {
                pub.new_authors.push_back(r.authors[i]);
            } else if (coauthored.count(pair_key(main_id, ids[i])) > 0) {
                pub.prior_coauthors.push_back(r.authors[i]);
            } else {
                pub.existing_non_coauthors.push_back(r.authors[i]);
            }
        }
        result.classified.push_back(std::move(pub));
    }
    return result;
}

CoauthorHistogram coauthor_histogram(std::span<const ClassifiedPublication> classified,
                                     std::uint32_t top_k) {
    if (classified.empty())
        throw invalid_parameter("coauthor_histogram: no retained publications");

    CoauthorHistogram hist;
    hist.publications = classified.size();
    std::uint64_t coauthor_total = 0;
    std::map<std::string, CoauthorHistogram::AuthorHistogram> per_author;
    for (const ClassifiedPublication& pub : classified) {
        const std::uint32_t k = static_cast<std::uint32_t>(pub.coauthor_count());
        ++hist.counts[k];
        coauthor_total += k;
        auto& ah = per_author[pub.main_author];
        ah.author = pub.main_author;
        ++ah.publications;
        ++ah.counts[k];
    }
    hist.lambda_hat = static_cast<double>(coauthor_total) / static_cast<double>(hist.publications);

    std::vector<CoauthorHistogram::AuthorHistogram> ranked;
    ranked.reserve(per_author.size());
    for (auto& [name, ah] : per_author) ranked.push_back(std::move(ah));
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.publications > b.publications;  // stable sort keeps name order for ties
    });
    if (ranked.size() > top_k) ranked.resize(top_k);
    hist.top_authors = std::move(ranked);
    return hist;
}

PoissonFitReport poisson_fit_report(const CoauthorHistogram& histogram) {
    if (histogram.counts.empty()) throw invalid_parameter("poisson_fit_report: empty histogram");

    PoissonFitReport report;
    report.lambda = histogram.lambda_hat;

    const std::uint32_t max_k = histogram.counts.rbegin()->first;
    std::vector<std::uint64_t> observed(max_k + 1, 0);
    for (const auto& [k, c] : histogram.counts) observed[k] = c;

    const double total = static_cast<double>(histogram.publications);
    double obs_cum = 0.0;
    double exp_cum = 0.0;
    for (std::uint32_t k = 0; k <= max_k; ++k) {
        PoissonFitRow row;
        row.k = k;
        row.observed = observed[k];
        row.observed_freq = static_cast<double>(observed[k]) / total;
        row.expected_freq = stats::poisson_pmf(k, report.lambda);
        obs_cum += row.observed_freq;
        exp_cum += row.expected_freq;
        row.observed_cumulative = obs_cum;
        row.expected_cumulative = exp_cum;
        report.rows.push_back(row);
    }

    const double lambda = report.lambda;
    report.chi_square = stats::chi_square_gof(
        observed, [lambda](std::uint32_t k) { return stats::poisson_pmf(k, lambda); }, 1);
    return report;
}

CoauthorshipNetwork build_coauthorship_network(std::span<const PublicationRecord> records) {
    CoauthorshipNetwork net;
    std::unordered_map<std::string, std::uint32_t> author_ids;

    // Each publication is a clique step, so per-node interaction counts and
    // first-appearance creation indices carry over to the network.
    std::uint32_t t = 0;
    for (const PublicationRecord& r : records) {
        if (r.authors.empty()) throw invalid_parameter("record has no authors");
        std::vector<NodeId> existing_members;
        std::uint32_t new_members = 0;
        for (const std::string& name : r.authors) {
            const auto it = author_ids.find(name);
            if (it != author_ids.end()) {
                existing_members.push_back(it->second);
            } else {
                const auto id = static_cast<std::uint32_t>(author_ids.size());
                author_ids.emplace(name, id);
                net.author_names.push_back(name);
                ++new_members;
            }
        }
        try {
            net.graph.apply_clique(existing_members, new_members, t);
        } catch (const structural_error&) {
            throw invalid_parameter("duplicate author within one record at index " +
                                    std::to_string(t));
        }
        ++t;
    }
    return net;
}

std::vector<PublicationRecord> read_publication_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path.string() + " for reading");

    std::vector<PublicationRecord> records;
    std::string line;
    std::uint64_t line_no = 0;
    if (!std::getline(in, line)) throw parse_error("empty publication CSV", 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "year,month,authors")
        throw parse_error("expected header 'year,month,authors', got '" + line + "'", line_no);

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw parse_error("expected 3 fields", line_no);

        PublicationRecord r;
        {
            const std::string_view field = std::string_view(line).substr(0, c1);
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                                   r.year);
            if (ec != std::errc{} || ptr != field.data() + field.size())
                throw parse_error("invalid year '" + std::string(field) + "'", line_no);
        }
        {
            const std::string_view field = std::string_view(line).substr(c1 + 1, c2 - c1 - 1);
            if (!field.empty()) {
                unsigned month = 0;
                const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                                       month);
                if (ec != std::errc{} || ptr != field.data() + field.size() || month < 1 ||
                    month > 12)
                    throw parse_error("invalid month '" + std::string(field) + "'", line_no);
                r.month = static_cast<std::uint8_t>(month);
            }
        }
        {
            std::string_view rest = std::string_view(line).substr(c2 + 1);
            while (!rest.empty()) {
                const auto bar = rest.find('|');
                const std::string_view name =
                    bar == std::string_view::npos ? rest : rest.substr(0, bar);
                if (name.empty()) throw parse_error("empty author name", line_no);
                r.authors.emplace_back(name);
                rest = bar == std::string_view::npos ? std::string_view{} : rest.substr(bar + 1);
            }
            if (r.authors.empty()) throw parse_error("record has no authors", line_no);
        }
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += '|';
        out += names[i];
    }
    return out;
}

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

void write_classified_csv(std::span<const ClassifiedPublication> classified,
                          const std::filesystem::path& path) {
    auto out = open_csv(path);
    out << "record,main_author,prior_coauthors,existing_non_coauthors,new_authors\n";
    for (const ClassifiedPublication& pub : classified) {
        out << pub.record_index << ',' << pub.main_author << ',' << join_names(pub.prior_coauthors)
            << ',' << join_names(pub.existing_non_coauthors) << ',' << join_names(pub.new_authors)
            << '\n';
    }
}

void write_histogram_csv(const CoauthorHistogram& histogram,
                         const std::filesystem::path& path) {
    auto out = open_csv(path);
    out << "value,count\n";
    for (const auto& [k, c] : histogram.counts) out << k << ',' << c << '\n';
}

void write_top_author_csv(const CoauthorHistogram& histogram,
                          const std::filesystem::path& path) {
    auto out = open_csv(path);
    out << "author,value,count\n";
    for (const auto& ah : histogram.top_authors)
        for (const auto& [k, c] : ah.counts) out << ah.author << ',' << k << ',' << c << '\n';
}

void write_fit_report_csv(const PoissonFitReport& report, const std::filesystem::path& path) {
    auto out = open_csv(path);
    char buf[512];
    out << "k,observed,observed_freq,expected_freq,observed_cumulative,expected_cumulative\n";
    for (const PoissonFitRow& row : report.rows) {
        std::snprintf(buf, sizeof buf, "%u,%llu,%.6f,%.6f,%.6f,%.6f\n", row.k,
                      static_cast<unsigned long long>(row.observed), row.observed_freq,
                      row.expected_freq, row.observed_cumulative, row.expected_cumulative);
        out << buf;
    }
}

}  // namespace lambda3
