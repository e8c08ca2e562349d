#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "kcolor/generators.hpp"
#include "kcolor/graph_io.hpp"
#include "kcolor/rational.hpp"
#include "support/process.hpp"

using kcolor::testsupport::run_command;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string cli = KCOLOR_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        std::string name = (fs::temp_directory_path() / "kcolor_cli_XXXXXX").string();
        REQUIRE(mkdtemp(name.data()) != nullptr);
        path = name;
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

const char* k3_dimacs = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const char* p3_edges = "0 1\n1 2\n";

json strip_timing(json j) {
    j.erase("elapsed_ms");
    return j;
}

} // namespace

TEST_CASE("gen writes named and random graphs deterministically") {
    TempDir dir;
    auto petersen = dir.file("petersen.col");
    auto result = run_command(cli + " gen --family petersen --output " + petersen);
    CHECK(result.exit_code == 0);
    std::ifstream in(petersen);
    auto g = kcolor::load_dimacs(in);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);

    auto a = dir.file("a.col");
    auto b = dir.file("b.col");
    CHECK(run_command(cli + " gen --gnp 30 0.2 --seed 42 --output " + a).exit_code == 0);
    CHECK(run_command(cli + " gen --gnp 30 0.2 --seed 42 --output " + b).exit_code == 0);
    CHECK(read_text(a) == read_text(b));

    CHECK(run_command(cli + " gen --family cycle --n 2 --output " + dir.file("c2.col"), true)
              .exit_code == 2);
    CHECK(run_command(cli + " gen --output " + dir.file("none.col"), true).exit_code == 2);
}

TEST_CASE("color reports a verified run as JSON") {
    TempDir dir;
    auto k3 = dir.file("k3.col");
    write_text(k3, k3_dimacs);

    auto result = run_command(cli + " color --input " + k3 + " --k 2");
    CHECK(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["verified"] == true);
    CHECK(report["n"] == 3);
    CHECK(report["m"] == 3);
    CHECK(report["k"] == 2);
    CHECK(report["bound"] == 2);
    CHECK(report["mixing_number"].get<long long>() >= 2);
    CHECK(report["bound_satisfied"] == true);
    CHECK(report["weights"].is_null());
}

TEST_CASE("color with explicit weights") {
    TempDir dir;
    auto p3 = dir.file("p3.edges");
    write_text(p3, p3_edges);

    auto result = run_command(cli + " color --input " + p3 + " --weights 1/4,3/4");
    CHECK(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["verified"] == true);
    CHECK(report["weights"] == json::array({"1/4", "3/4"}));
    CHECK(report["bound"].is_null());

    auto bad = run_command(cli + " color --input " + p3 + " --weights 1/4,1/4", true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("sum of weights must be >= 1") != std::string::npos);

    auto neither = run_command(cli + " color --input " + p3, true);
    CHECK(neither.exit_code == 2);
}

TEST_CASE("color/verify round-trip through coloring files") {
    TempDir dir;
    auto k3 = dir.file("k3.col");
    write_text(k3, k3_dimacs);
    auto coloring = dir.file("coloring.json");
    auto trace = dir.file("trace.jsonl");

    auto color = run_command(cli + " color --input " + k3 + " --k 2 --coloring-out " + coloring +
                             " --trace " + trace);
    CHECK(color.exit_code == 0);

    auto verify = run_command(cli + " verify --input " + k3 + " --coloring " + coloring +
                              " --mode integrated --k 2");
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("OK") != std::string::npos);

    auto unfriendly = run_command(cli + " verify --input " + k3 + " --coloring " + coloring +
                                  " --mode unfriendly");
    CHECK(unfriendly.exit_code == 0);

    // the trace is one JSON object per line
    std::istringstream lines(read_text(trace));
    std::string line;
    int steps = 0;
    while (std::getline(lines, line)) {
        json j = json::parse(line);
        CHECK(j.contains("sigma_before"));
        ++steps;
    }
    CHECK(steps == json::parse(color.output)["steps"].get<int>());
}

TEST_CASE("verify flags violations and bad inputs") {
    TempDir dir;
    auto k3 = dir.file("k3.col");
    write_text(k3, k3_dimacs);
    auto mono = dir.file("mono.json");
    write_text(mono, R"({"k":2,"colors":[1,1,1]})");

    auto human = run_command(cli + " verify --input " + k3 + " --coloring " + mono +
                             " --mode integrated --k 2");
    CHECK(human.exit_code == 1);
    CHECK(human.output.find("FAIL") != std::string::npos);

    auto machine = run_command(cli + " verify --input " + k3 + " --coloring " + mono +
                               " --mode integrated --k 2 --json");
    CHECK(machine.exit_code == 1);
    json report = json::parse(machine.output);
    CHECK(report["ok"] == false);
    CHECK(report["violations"].size() == 3);
    CHECK(report["violations"][0]["threshold"] == "1/1");

    auto proper = run_command(cli + " verify --input " + k3 + " --coloring " + mono +
                              " --mode proper");
    CHECK(proper.exit_code == 1);

    auto c4 = dir.file("c4.col");
    write_text(c4, "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    auto alternating = dir.file("alt.json");
    write_text(alternating, R"({"k":2,"colors":[1,2,1,2]})");
    CHECK(run_command(cli + " verify --input " + c4 + " --coloring " + alternating +
                      " --mode proper")
              .exit_code == 0);

    auto short_coloring = dir.file("short.json");
    write_text(short_coloring, R"({"k":2,"colors":[1,2]})");
    CHECK(run_command(cli + " verify --input " + k3 + " --coloring " + short_coloring +
                          " --mode proper",
                      true)
              .exit_code == 2);

    auto out_of_range = dir.file("range.json");
    write_text(out_of_range, R"({"k":2,"colors":[1,2,5]})");
    CHECK(run_command(cli + " verify --input " + k3 + " --coloring " + out_of_range +
                          " --mode proper",
                      true)
              .exit_code == 2);
}

TEST_CASE("cut prints the partition with its guarantee") {
    TempDir dir;
    auto k4 = dir.file("k4.col");
    write_text(k4, "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");

    auto result = run_command(cli + " cut --input " + k4 + " --k 2 --partition-out " +
                              dir.file("part.json"));
    CHECK(result.exit_code == 0);
    json report = json::parse(result.output);
    CHECK(report["bound"] == 3);
    CHECK(report["cut_edges"].get<long long>() >= 3);
    CHECK(report["bound_satisfied"] == true);
    CHECK(report["partition"]["parts"].size() == 2);
}

TEST_CASE("oracle checks") {
    TempDir dir;
    auto k3 = dir.file("k3.col");
    write_text(k3, k3_dimacs);
    auto c5 = dir.file("c5.col");
    write_text(c5, "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");

    auto exists = run_command(cli + " oracle --input " + k3 + " --check exists --k 2");
    CHECK(exists.exit_code == 0);
    json exists_report = json::parse(exists.output);
    CHECK(exists_report["exists"] == true);
    CHECK(exists_report["valid_count"] == 6);
    CHECK(exists_report["witness"]["colors"] == json::array({1, 1, 2}));

    auto maxcut = run_command(cli + " oracle --input " + c5 + " --check maxcut --k 2 --compare");
    CHECK(maxcut.exit_code == 0);
    json maxcut_report = json::parse(maxcut.output);
    CHECK(maxcut_report["max_cut"] == 4);
    CHECK(maxcut_report["agreement"] == true);

    auto minsigma = run_command(cli + " oracle --input " + k3 +
                                " --check minsigma --weights 1/2,1/2 --compare");
    CHECK(minsigma.exit_code == 0);
    json minsigma_report = json::parse(minsigma.output);
    CHECK(minsigma_report["min_sigma"] == "2/1");
    CHECK(minsigma_report["minimizer_count"] == 6);
    CHECK(minsigma_report["minimizer_proportional_ok"] == true);

    auto limited = run_command(cli + " oracle --input " + c5 + " --check exists --k 2 --limit 8",
                               true);
    CHECK(limited.exit_code == 2);
    CHECK(limited.output.find("32") != std::string::npos); // 2^5 needed
    CHECK(limited.output.find("8") != std::string::npos);
}

TEST_CASE("bench runs a corpus and writes sorted JSON lines plus a summary") {
    TempDir dir;
    fs::create_directories(dir.file("corpus"));
    write_text(dir.file("corpus/a_k3.col"), k3_dimacs);
    write_text(dir.file("corpus/b_p3.edges"), p3_edges);
    auto out = dir.file("results.jsonl");

    auto result = run_command(cli + " bench --corpus " + dir.file("corpus") +
                              " --k 3,2 --seeds 2,1 --output " + out);
    CHECK(result.exit_code == 0);

    std::istringstream lines(read_text(out));
    std::string line;
    std::vector<json> rows;
    while (std::getline(lines, line))
        rows.push_back(json::parse(line));
    REQUIRE(rows.size() == 9); // 2 graphs * 2 k * 2 seeds + summary
    json summary = rows.back();
    CHECK(summary["summary"] == true);
    CHECK(summary["runs"] == 8);
    CHECK(summary["verified"] == 8);
    CHECK(summary["bound_satisfied"] == 8);
    CHECK(summary["load_failures"] == 0);

    // rows come sorted by (graph, k, seed)
    std::vector<std::tuple<std::string, int, int>> keys;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        keys.emplace_back(rows[i]["graph"].get<std::string>(), rows[i]["k"].get<int>(),
                          rows[i]["seed"].get<int>());
    CHECK(std::is_sorted(keys.begin(), keys.end()));

    // a corrupt file marks its row failed and the exit code nonzero
    write_text(dir.file("corpus/c_bad.col"), "p edge x y\n");
    auto failed = run_command(cli + " bench --corpus " + dir.file("corpus") +
                              " --k 2 --seeds 1 --output " + out);
    CHECK(failed.exit_code == 1);
    std::istringstream failed_lines(read_text(out));
    bool saw_failed_row = false;
    while (std::getline(failed_lines, line)) {
        json row = json::parse(line);
        if (row.value("status", "") == "failed")
            saw_failed_row = true;
    }
    CHECK(saw_failed_row);

    // empty corpus: no runs, exit 0
    fs::create_directories(dir.file("empty"));
    auto empty = run_command(cli + " bench --corpus " + dir.file("empty") +
                             " --k 2 --seeds 1 --output " + dir.file("empty.jsonl"));
    CHECK(empty.exit_code == 0);
}

TEST_CASE("bench handles a production-size corpus") {
    TempDir dir;
    fs::create_directories(dir.file("corpus"));
    for (int seed = 1; seed <= 100; ++seed) {
        kcolor::Graph g = kcolor::gen_gnp(50, 0.2, static_cast<std::uint64_t>(seed));
        char name[32];
        std::snprintf(name, sizeof(name), "corpus/gnp-%03d.col", seed);
        std::ofstream out(dir.file(name));
        kcolor::serialize_dimacs(g, out);
    }
    auto out = dir.file("results.jsonl");
    auto result = run_command(cli + " bench --corpus " + dir.file("corpus") +
                              " --k 2,3,5 --seeds 1 --output " + out);
    CHECK(result.exit_code == 0);
    json summary = json::parse(result.output);
    CHECK(summary["runs"] == 300);
    CHECK(summary["verified"] == 300);
    CHECK(summary["bound_satisfied"] == 300);
    // step/m never exceeds 1 under uniform weights
    auto ratio = kcolor::Rational::parse(summary["max_step_ratio"].get<std::string>());
    CHECK(ratio <= kcolor::Rational(1));

    std::istringstream lines(read_text(out));
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 301); // 300 runs + summary
}

TEST_CASE("identical invocations are byte-identical modulo wall time") {
    TempDir dir;
    auto g = dir.file("g.col");
    CHECK(run_command(cli + " gen --gnp 24 0.3 --seed 9 --output " + g).exit_code == 0);

    auto first = run_command(cli + " color --input " + g + " --k 3 --init random --seed 4");
    auto second = run_command(cli + " color --input " + g + " --k 3 --init random --seed 4");
    CHECK(first.exit_code == 0);
    CHECK(strip_timing(json::parse(first.output)) == strip_timing(json::parse(second.output)));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_command(cli + " frobnicate", true).exit_code == 2);
    CHECK(run_command(cli + " color", true).exit_code == 2);
    CHECK(run_command(cli + " --help", true).exit_code == 0);
    CHECK(run_command(cli + " color --input /nonexistent.col --k 2", true).exit_code == 2);
}
