#include <doctest.h>

#include <sstream>

#include "lambda3/generator.hpp"
#include "lambda3/graph_io.hpp"
#include "support/fixtures.hpp"

TEST_SUITE_BEGIN("io");

TEST_CASE("edge CSV format: header, src<dst, LF endings, sorted rows") {
    const auto g = fixtures::from_pairs({{2, 1}, {0, 2}, {0, 1}});
    std::ostringstream out;
    lambda3::write_edge_csv(g, out);
    CHECK(out.str() == "src,dst,weight\n0,1,1\n0,2,1\n1,2,1\n");
}

TEST_CASE("edge CSV round-trips through the reader") {
    lambda3::GeneratorConfig cfg;
    cfg.n_target = 250;
    cfg.lambda1 = 1.6;
    cfg.lambda2 = 0.35;
    cfg.lambda3 = 0.05;
    cfg.seed = 21;
    const auto result = lambda3::generate(cfg);

    std::ostringstream out;
    lambda3::write_edge_csv(result.graph, out);
    std::istringstream in(out.str());
    const auto loaded = lambda3::read_edge_csv(in);

    CHECK(loaded.node_count() == result.graph.node_count());
    CHECK(loaded.edge_count() == result.graph.edge_count());
    CHECK(loaded.total_edge_weight() == result.graph.total_edge_weight());
    for (std::uint32_t v = 0; v < loaded.node_count(); ++v) {
        const auto a = loaded.neighbors(v);
        const auto b = result.graph.neighbors(v);
        CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }

    // Writing the loaded graph again is byte-identical.
    std::ostringstream out2;
    lambda3::write_edge_csv(loaded, out2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("edge CSV reader reports the offending line") {
    const auto expect_line = [](const std::string& text, std::uint64_t line) {
        std::istringstream in(text);
        try {
            lambda3::read_edge_csv(in);
            FAIL("expected parse_error");
        } catch (const lambda3::parse_error& ex) {
            CHECK(ex.line_number == line);
        }
    };
    expect_line("bad header\n", 1);
    expect_line("src,dst,weight\n0,1\n", 2);
    expect_line("src,dst,weight\n0,1,1\nx,2,1\n", 3);
    expect_line("src,dst,weight\n1,0,1\n", 2);   // src < dst required
    expect_line("src,dst,weight\n0,1,0\n", 2);   // zero weight
}

TEST_CASE("interaction log JSONL round-trips and keeps ascending t") {
    lambda3::GeneratorConfig cfg;
    cfg.n_target = 120;
    cfg.lambda1 = 0.8;
    cfg.lambda2 = 0.5;
    cfg.lambda3 = 0.2;
    cfg.seed = 77;
    const auto result = lambda3::generate(cfg);

    std::ostringstream out;
    lambda3::write_interaction_log(result.log, out);
    std::istringstream in(out.str());
    const auto loaded = lambda3::read_interaction_log(in);
    CHECK(loaded == result.log);

    // The log reproduces the exact graph.
    const auto replayed = lambda3::replay_log(loaded);
    CHECK(replayed.node_count() == result.graph.node_count());
    CHECK(replayed.edge_count() == result.graph.edge_count());
}

TEST_CASE("interaction log JSONL carries the documented keys") {
    std::vector<lambda3::Interaction> log(1);
    log[0].t = 0;
    log[0].proactive = 0;
    log[0].newbies = {1, 2};
    std::ostringstream out;
    lambda3::write_interaction_log(log, out);
    const std::string line = out.str();
    CHECK(line.find("\"t\"") != std::string::npos);
    CHECK(line.find("\"proactive\"") != std::string::npos);
    CHECK(line.find("\"neighbors\"") != std::string::npos);
    CHECK(line.find("\"newbies\"") != std::string::npos);
    CHECK(line.find("\"new_connections\"") != std::string::npos);
    CHECK(line.back() == '\n');
}

TEST_CASE("interaction log reader rejects malformed input with line numbers") {
    const auto expect_line = [](const std::string& text, std::uint64_t line) {
        std::istringstream in(text);
        try {
            lambda3::read_interaction_log(in);
            FAIL("expected parse_error");
        } catch (const lambda3::parse_error& ex) {
            CHECK(ex.line_number == line);
        }
    };
    expect_line("not json\n", 1);
    expect_line(R"({"t":0,"proactive":0,"newbies":[1],"neighbors":[]})"
                "\n",
                1);  // missing new_connections
    expect_line(R"({"t":0,"proactive":0,"newbies":[1],"neighbors":[],"new_connections":[]})"
                "\n"
                R"({"t":2,"proactive":0,"newbies":[2],"neighbors":[],"new_connections":[]})"
                "\n",
                2);  // t out of order
}

TEST_CASE("graph_from_edges validates its input") {
    CHECK_THROWS_AS(lambda3::graph_from_edges(std::vector<lambda3::WeightedEdge>{{1, 1, 1}}),
                    lambda3::invalid_parameter);
    CHECK_THROWS_AS(lambda3::graph_from_edges(std::vector<lambda3::WeightedEdge>{{0, 1, 0}}),
                    lambda3::invalid_parameter);
    CHECK_THROWS_AS(
        lambda3::graph_from_edges(std::vector<lambda3::WeightedEdge>{{0, 1, 1}, {0, 1, 2}}),
        lambda3::invalid_parameter);
}

TEST_SUITE_END();
