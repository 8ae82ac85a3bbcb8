// End-to-end checks of the lambda3 binary: flags, exit codes, file outputs
// and cross-subcommand consistency. Each test works in its own temp dir.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef LAMBDA3_CLI_PATH
#error "LAMBDA3_CLI_PATH must point at the lambda3 binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LAMBDA3_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("lambda3_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json slurp_json(const fs::path& path) { return json::parse(slurp(path)); }

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("generate writes its three artifacts and is byte-deterministic") {
    const fs::path dir = fresh_dir("generate");
    const std::string flags =
        " generate -N 300 --l1 1.6 --l2 0.35 --l3 0.05 --seed 42 -o " + (dir / "a").string();
    REQUIRE(run_cli(flags) == 0);
    CHECK(fs::exists(dir / "a" / "edges.csv"));
    CHECK(fs::exists(dir / "a" / "interactions.jsonl"));
    CHECK(fs::exists(dir / "a" / "summary.json"));

    REQUIRE(run_cli(" generate -N 300 --l1 1.6 --l2 0.35 --l3 0.05 --seed 42 -o " +
                    (dir / "b").string()) == 0);
    CHECK(slurp(dir / "a" / "edges.csv") == slurp(dir / "b" / "edges.csv"));
    CHECK(slurp(dir / "a" / "interactions.jsonl") == slurp(dir / "b" / "interactions.jsonl"));
    CHECK(slurp(dir / "a" / "summary.json") == slurp(dir / "b" / "summary.json"));

    // Different seed, different network.
    REQUIRE(run_cli(" generate -N 300 --l1 1.6 --l2 0.35 --l3 0.05 --seed 43 -o " +
                    (dir / "c").string()) == 0);
    CHECK(slurp(dir / "a" / "edges.csv") != slurp(dir / "c" / "edges.csv"));
}

TEST_CASE("tiny generate produces the genesis K2") {
    const fs::path dir = fresh_dir("k2");
    REQUIRE(run_cli(" generate -N 2 --l2 1 -o " + dir.string()) == 0);
    CHECK(slurp(dir / "edges.csv") == "src,dst,weight\n0,1,1\n");
}

TEST_CASE("missing required flags exit with code 2") {
    CHECK(run_cli(" generate -N 100") == 2);            // no --l2
    CHECK(run_cli(" generate --l2 0.5") == 2);          // no -N
    CHECK(run_cli(" metrics") == 2);                    // no input
    CHECK(run_cli(" bogus-subcommand") == 2);
    CHECK(run_cli(" --help") == 0);
}

TEST_CASE("invalid generator parameters exit with code 1") {
    const fs::path dir = fresh_dir("badcfg");
    CHECK(run_cli(" generate -N 5 --l1 3 --l2 6 --l3 1 -o " + dir.string()) == 1);
}

TEST_CASE("metrics on a triangle reports full clustering") {
    const fs::path dir = fresh_dir("triangle");
    write_file(dir / "edges.csv", "src,dst,weight\n0,1,1\n0,2,1\n1,2,1\n");
    REQUIRE(run_cli(" metrics -i " + (dir / "edges.csv").string() + " --exact -o " +
                    dir.string()) == 0);
    const json report = slurp_json(dir / "report.json");
    CHECK(report["metrics"]["global_cc"].get<double>() == 1.0);
    CHECK(report["metrics"]["mean_local_cc"].get<double>() == 1.0);
    CHECK(report["metrics"]["n"].get<int>() == 3);
    CHECK(report["metrics"]["mean_shortest_path"].get<double>() == 1.0);
    CHECK(slurp(dir / "degree_distribution.csv") == "value,count\n2,3\n");
}

TEST_CASE("metrics on a malformed edge list exits 1") {
    const fs::path dir = fresh_dir("badedges");
    write_file(dir / "edges.csv", "src,dst,weight\n0,zap,1\n");
    CHECK(run_cli(" metrics -i " + (dir / "edges.csv").string() + " -o " + dir.string()) == 1);
}

TEST_CASE("generate then metrics reproduces the embedded summary") {
    const fs::path dir = fresh_dir("roundtrip");
    REQUIRE(run_cli(" generate -N 400 --l1 1.6 --l2 0.35 --l3 0.05 --seed 7 -o " +
                    dir.string()) == 0);
    REQUIRE(run_cli(" metrics -i " + (dir / "edges.csv").string() + " --seed 7 -o " +
                    dir.string()) == 0);
    const json summary = slurp_json(dir / "summary.json");
    const json report = slurp_json(dir / "report.json");
    CHECK(summary["metrics"] == report["metrics"]);
}

TEST_CASE("communities separates two bridged cliques") {
    const fs::path dir = fresh_dir("communities");
    std::string csv = "src,dst,weight\n";
    // K4 on 0-3, K4 on 4-7, bridge 3-4.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            csv += std::to_string(i) + "," + std::to_string(j) + ",1\n";
    for (int i = 4; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            csv += std::to_string(i) + "," + std::to_string(j) + ",1\n";
    csv += "3,4,1\n";
    write_file(dir / "edges.csv", csv);

    REQUIRE(run_cli(" communities -i " + (dir / "edges.csv").string() + " --seed 7 -o " +
                    dir.string()) == 0);
    const json summary = slurp_json(dir / "communities.json");
    CHECK(summary["com_L"].get<int>() == 2);
    CHECK(summary["Q_L"].get<double>() > 0.3);
    CHECK(summary["com_IM"].is_null());

    const std::string partition = slurp(dir / "partition.csv");
    CHECK(partition.substr(0, 15) == "node,community\n");
    CHECK(fs::exists(dir / "community_sizes.csv"));
}

TEST_CASE("ingest processes a small publication stream") {
    const fs::path dir = fresh_dir("ingest");
    write_file(dir / "pubs.csv",
               "year,month,authors\n"
               "2000,1,alice|bob\n"
               "2000,2,alice|carol\n"
               "2000,3,bob|alice|dave\n"
               "2000,,eve|alice\n");
    REQUIRE(run_cli(" ingest -i " + (dir / "pubs.csv").string() + " --seed 5 -o " +
                    dir.string()) == 0);
    CHECK(fs::exists(dir / "classified.csv"));
    CHECK(fs::exists(dir / "histogram.csv"));
    CHECK(fs::exists(dir / "fit_report.csv"));
    CHECK(fs::exists(dir / "edges.csv"));
    const json summary = slurp_json(dir / "ingest.json");
    CHECK(summary["records"].get<int>() == 4);
    CHECK(summary["network_nodes"].get<int>() == 5);
    CHECK(summary["dropped"].get<int>() >= 1);
}

TEST_CASE("ensemble, evolve and correlate smoke runs") {
    const fs::path dir = fresh_dir("experiments");
    REQUIRE(run_cli(" ensemble --preset setting1 -N 250 --runs 2 --seed 9 -o " +
                    (dir / "ens").string()) == 0);
    CHECK(fs::exists(dir / "ens" / "report.csv"));
    const json ens = slurp_json(dir / "ens" / "report.json");
    CHECK(ens["run_count"].get<int>() == 2);
    CHECK(ens["summary"]["com_IM"].is_null());

    REQUIRE(run_cli(" evolve --preset setting1 --thresholds 10,50,120 --seed 3 -o " +
                    (dir / "evo").string()) == 0);
    const std::string evolution = slurp(dir / "evo" / "evolution.csv");
    CHECK(evolution.find("threshold,") == 0);
    CHECK(std::count(evolution.begin(), evolution.end(), '\n') == 4);  // header + 3 rows

    REQUIRE(run_cli(" correlate --preset setting1 -N 1500 --seed 4 -o " +
                    (dir / "corr").string()) == 0);
    const json corr = slurp_json(dir / "corr" / "correlations.json");
    CHECK(corr["rho_degree_interactions"].get<double>() > 0.0);

    // Custom lambdas instead of a preset.
    REQUIRE(run_cli(" correlate --l1 1.0 --l2 0.5 --l3 0.1 -N 1200 --seed 4 -o " +
                    (dir / "corr2").string()) == 0);
    // Preset and lambdas are mutually exclusive.
    CHECK(run_cli(" correlate --preset setting1 --l2 0.5 -N 1200 -o " +
                  (dir / "corr3").string()) == 2);
    // Unknown preset name.
    CHECK(run_cli(" correlate --preset setting9 -N 1200 -o " + (dir / "corr4").string()) == 2);
}

TEST_CASE("scalar and SIMD kernel paths give byte-identical reports") {
    const fs::path dir = fresh_dir("isa");
    REQUIRE(run_cli(" generate -N 500 --l1 1.6 --l2 0.35 --l3 0.05 --seed 3 -o " +
                    dir.string()) == 0);
    REQUIRE(run_cli(" metrics -i " + (dir / "edges.csv").string() + " --exact -o " +
                    (dir / "simd").string()) == 0);
    REQUIRE(run_cli(" --force-scalar metrics -i " + (dir / "edges.csv").string() +
                    " --exact -o " + (dir / "scalar").string()) == 0);
    CHECK(slurp(dir / "simd" / "report.json") == slurp(dir / "scalar" / "report.json"));
}

TEST_CASE("identical ensemble flags give byte-identical reports") {
    const fs::path dir = fresh_dir("ens_det");
    REQUIRE(run_cli(" ensemble --preset setting3 -N 200 --runs 2 --seed 11 -o " +
                    (dir / "a").string()) == 0);
    REQUIRE(run_cli(" ensemble --preset setting3 -N 200 --runs 2 --seed 11 -o " +
                    (dir / "b").string()) == 0);
    CHECK(slurp(dir / "a" / "report.csv") == slurp(dir / "b" / "report.csv"));
    CHECK(slurp(dir / "a" / "report.json") == slurp(dir / "b" / "report.json"));
}
