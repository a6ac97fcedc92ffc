#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "blocksing/generate.hpp"
#include "blocksing/oracle.hpp"
#include "cli.hpp"

using namespace blocksing;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(BLOCKSING_FIXTURE_DIR) + "/" + name; }

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, cli::Environment env = {}) {
    args.insert(args.begin(), "blocksing");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(json::parse(line));
    }
    return lines;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("blocksing_cli_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check reports verdicts through exit codes") {
    const Run fig1 = run({"check", fixture("fig1.graph")});
    CHECK(fig1.code == cli::kNonsingular);
    const json report = json::parse(fig1.out);
    CHECK(report["verdict"] == "nonsingular");
    CHECK_FALSE(report.contains("reason"));
    CHECK(report["n"] == 12);
    CHECK(report["m"] == 21);
    CHECK(report["num_blocks"] == 4);
    CHECK(report["elapsed_ns"].get<std::int64_t>() > 0);
    CHECK(report["max_rational_bits"] == 5);
    CHECK_FALSE(report.contains("trace"));

    const Run fig3 = run({"check", fixture("fig3.graph")});
    CHECK(fig3.code == cli::kSingular);
    const json singular = json::parse(fig3.out);
    CHECK(singular["verdict"] == "singular");
    CHECK(singular["reason"] == "final_component");

    const Run c4 = run({"check", fixture("c4.graph")});
    CHECK(c4.code == cli::kInvalidInput);
    CHECK(c4.err.find("block 1 is not complete") != std::string::npos);
    CHECK(c4.out.empty());
}

TEST_CASE("check with trace") {
    const Run r = run({"check", "--trace", fixture("fig2.graph")});
    CHECK(r.code == cli::kSingular);
    const json report = json::parse(r.out);
    REQUIRE(report["trace"].is_array());
    CHECK(report["trace"].back()["case"] == "final_component");
    CHECK(report["witness_block"] == json::array({1, 2, 3}));
}

TEST_CASE("trace output") {
    const Run fig1 = run({"trace", fixture("fig1.graph")});
    CHECK(fig1.code == cli::kNonsingular);
    const auto steps = json_lines(fig1.out);
    REQUIRE(steps.size() == 4);
    const json& first = steps.front();
    std::vector<std::string> keys;
    for (const auto& [key, value] : first.items()) {
        keys.push_back(key);
    }
    CHECK(std::set<std::string>(keys.begin(), keys.end()) ==
          std::set<std::string>{"step", "block", "cut_vertex", "case", "S", "gamma", "new_weight"});
    CHECK(first["step"] == 1);
    CHECK(first["block"] == json::array({3, 5, 6, 7}));
    CHECK(first["cut_vertex"] == 3);
    CHECK(first["case"] == "sum_neq_one");
    CHECK(first["S"] == "3");
    CHECK(first["gamma"] == "-3/2");
    CHECK(first["new_weight"] == "-3/2");
    CHECK(steps.back()["S"] == "30/13");
    CHECK(steps.back()["cut_vertex"].is_null());
    CHECK(steps.back()["gamma"].is_null());

    const auto fig2 = json_lines(run({"trace", fixture("fig2.graph")}).out);
    CHECK(fig2.back()["case"] == "final_component");
    CHECK(fig2.back()["block"] == json::array({1, 2, 3}));
    CHECK(fig2.back()["S"] == "1");

    const Run k4 = run({"trace", fixture("k4.graph")});
    const auto single = json_lines(k4.out);
    REQUIRE(single.size() == 1);
    CHECK(single.front()["case"] == "final_component");
    CHECK(k4.code == cli::kNonsingular);
}

TEST_CASE("oracle, decompose and gen") {
    const json fig2 = json::parse(run({"oracle", fixture("fig2.graph")}).out);
    CHECK(fig2["det"] == "0");
    CHECK(fig2["nullity"].get<int>() >= 1);
    const json weighted = json::parse(run({"oracle", fixture("weighted_p3.graph")}).out);
    CHECK(weighted["det"] == "3/2");
    CHECK(weighted["rank"] == 3);

    const json d = json::parse(run({"decompose", fixture("fig1.graph")}).out);
    CHECK(d["f"]["1"] == 2);
    CHECK(d["f"]["2"] == 2);
    CHECK(d["f"]["3"] == 2);
    CHECK(d["BV"].size() == 4);

    std::ifstream fig3(fixture("fig3.graph"));
    const std::string expected((std::istreambuf_iterator<char>(fig3)), std::istreambuf_iterator<char>());
    const Run star = run({"gen", "star", "9"});
    CHECK(star.code == 0);
    CHECK(star.out == expected);
    for (const char* name : {"fig1", "fig2"}) {
        std::ifstream in(fixture(std::string(name) + ".graph"));
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(run({"gen", name}).out == text);
    }
    CHECK(run({"gen", "bogus"}).code == cli::kInvalidInput);
}

TEST_CASE("invalid input") {
    CHECK(run({"check", "/nonexistent/file.graph"}).code == cli::kInvalidInput);
    const Run bad = run({"check", temp_file("dup.graph", "2 2\n1 2\n2 1\n")});
    CHECK(bad.code == cli::kInvalidInput);
    CHECK(bad.err.find("line 3") != std::string::npos);
    CHECK(run({}).code == cli::kInvalidInput);
    CHECK(run({"frobnicate"}).code == cli::kInvalidInput);
    CHECK(run({"oracle", fixture("c4.graph")}).code == 0);
    CHECK(run({"decompose", fixture("c4.graph")}).code == cli::kInvalidInput);
}

TEST_CASE("seeded pendant order keeps the verdict") {
    const std::string path = temp_file("rb.graph", serialize_graph(generate(family::RandomBlock{12, 2, 4, 9})));
    const int expected = run({"check", path}).code;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CHECK(run({"check", path}, cli::Environment{seed}).code == expected);
    }
}

TEST_CASE("check agrees with the oracle on the fixtures") {
    for (const char* name : {"fig1.graph", "fig2.graph", "fig3.graph", "k4.graph", "weighted_p3.graph"}) {
        CAPTURE(name);
        const json oracle = json::parse(run({"oracle", fixture(name)}).out);
        const int code = run({"check", fixture(name)}).code;
        CHECK((code == cli::kNonsingular) == (oracle["det"] != "0"));
    }
}

TEST_CASE("bench") {
    const Run r = run({"bench", "--family", "path", "--sizes", "100,200", "--repeats", "2", "--oracle"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "size,median_ns,max_rational_bits,oracle_median_ns");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
    }
    CHECK(rows == 2);
    CHECK(run({"bench", "--family", "nope", "--sizes", "10", "--repeats", "1"}).code == cli::kInvalidInput);
}

}  // TEST_SUITE
