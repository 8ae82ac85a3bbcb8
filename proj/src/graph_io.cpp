#include "lambda3/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace lambda3 {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open " + path.string() + " for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path.string() + " for reading");
    return in;
}

std::uint32_t parse_u32(std::string_view field, std::uint64_t line, const char* what) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw parse_error(std::string("invalid ") + what + " '" + std::string(field) + "'", line);
    return value;
}

}  // namespace

TemporalGraph graph_from_edges(std::span<const WeightedEdge> edges,
                               std::uint32_t node_count_hint) {
    std::uint32_t n = node_count_hint;
    for (const WeightedEdge& e : edges) {
        if (e.src == e.dst) throw invalid_parameter("self-loop in edge list");
        if (e.weight == 0) throw invalid_parameter("zero edge weight in edge list");
        n = std::max(n, std::max(e.src, e.dst) + 1);
    }

    std::vector<std::vector<NodeId>> adj(n);
    std::vector<std::vector<std::uint32_t>> w(n);
    for (const WeightedEdge& e : edges) {
        adj[e.src].push_back(e.dst);
        w[e.src].push_back(e.weight);
        adj[e.dst].push_back(e.src);
        w[e.dst].push_back(e.weight);
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<std::size_t> order(adj[v].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return adj[v][a] < adj[v][b]; });
        std::vector<NodeId> sorted_adj(adj[v].size());
        std::vector<std::uint32_t> sorted_w(adj[v].size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sorted_adj[i] = adj[v][order[i]];
            sorted_w[i] = w[v][order[i]];
        }
        if (std::adjacent_find(sorted_adj.begin(), sorted_adj.end()) != sorted_adj.end())
            throw invalid_parameter("duplicate edge in edge list");
        adj[v] = std::move(sorted_adj);
        w[v] = std::move(sorted_w);
    }
    return TemporalGraph::from_parts(std::move(adj), std::move(w));
}

void write_edge_csv(const TemporalGraph& g, std::ostream& out) {
    out << "src,dst,weight\n";
    char buf[64];
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto adj = g.neighbors(u);
        const auto w = g.neighbor_weights(u);
        for (std::size_t i = 0; i < adj.size(); ++i) {
            if (adj[i] <= u) continue;  // emit each edge once, src < dst
            const int len = std::snprintf(buf, sizeof buf, "%u,%u,%u\n", u, adj[i], w[i]);
            out.write(buf, len);
        }
    }
}

void write_edge_csv(const TemporalGraph& g, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_edge_csv(g, out);
}

TemporalGraph read_edge_csv(std::istream& in) {
    std::string line;
    std::uint64_t line_no = 0;
    if (!std::getline(in, line)) throw parse_error("empty edge CSV", 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "src,dst,weight")
        throw parse_error("expected header 'src,dst,weight', got '" + line + "'", line_no);

    std::vector<WeightedEdge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw parse_error("expected 3 fields", line_no);
        WeightedEdge e;
        e.src = parse_u32(std::string_view(line).substr(0, c1), line_no, "src");
        e.dst = parse_u32(std::string_view(line).substr(c1 + 1, c2 - c1 - 1), line_no, "dst");
        e.weight = parse_u32(std::string_view(line).substr(c2 + 1), line_no, "weight");
        if (e.src >= e.dst) throw parse_error("edge rows require src < dst", line_no);
        if (e.weight == 0) throw parse_error("edge weight must be positive", line_no);
        edges.push_back(e);
    }
    try {
        return graph_from_edges(edges);
    } catch (const invalid_parameter& ex) {
        throw parse_error(ex.what());
    }
}

TemporalGraph read_edge_csv(const std::filesystem::path& path) {
    auto in = open_in(path);
    try {
        return read_edge_csv(in);
    } catch (parse_error& ex) {
        throw parse_error(path.string() + ": " + ex.what(), 0);
    }
}

void write_interaction_log(std::span<const Interaction> log, std::ostream& out) {
    for (const Interaction& i : log) {
        nlohmann::json obj{
            {"t", i.t},
            {"proactive", i.proactive},
            {"neighbors", i.neighbors},
            {"newbies", i.newbies},
            {"new_connections", i.new_connections},
        };
        out << obj.dump() << '\n';
    }
}

void write_interaction_log(std::span<const Interaction> log,
                           const std::filesystem::path& path) {
    auto out = open_out(path);
    write_interaction_log(log, out);
}

std::vector<Interaction> read_interaction_log(std::istream& in) {
    std::vector<Interaction> log;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& ex) {
            throw parse_error(std::string("invalid JSON: ") + ex.what(), line_no);
        }
        try {
            Interaction i;
            i.t = obj.at("t").get<std::uint32_t>();
            i.proactive = obj.at("proactive").get<NodeId>();
            i.neighbors = obj.at("neighbors").get<std::vector<NodeId>>();
            i.newbies = obj.at("newbies").get<std::vector<NodeId>>();
            i.new_connections = obj.at("new_connections").get<std::vector<NodeId>>();
            if (i.t != log.size())
                throw parse_error("interaction t=" + std::to_string(i.t) +
                                      " out of order (expected " + std::to_string(log.size()) + ")",
                                  line_no);
            log.push_back(std::move(i));
        } catch (const nlohmann::json::exception& ex) {
            throw parse_error(std::string("bad interaction object: ") + ex.what(), line_no);
        }
    }
    return log;
}

std::vector<Interaction> read_interaction_log(const std::filesystem::path& path) {
    auto in = open_in(path);
    try {
        return read_interaction_log(in);
    } catch (parse_error& ex) {
        throw parse_error(path.string() + ": " + ex.what(), 0);
    }
}

}  // namespace lambda3
