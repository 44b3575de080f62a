#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cjac/cli.hpp"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cjac::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CJAC_DATA_DIR) + "/" + name; }

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.insert(args.begin(), "--json");
    const Run r = run(args);
    REQUIRE(r.code == expected_code);
    return nlohmann::json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("cjac_cli_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("phi on the 4-cycle") {
    const auto j = run_json({"phi", data("four_cycle.json")});
    CHECK(j["command"] == "phi");
    CHECK(j["results"]["order"] == 4);
    CHECK(j["results"]["invariant_factors"] == nlohmann::json::array({4}));
    for (const auto& c : j["verification"]) CHECK(c["passed"] == true);
    CHECK(j["input"].get<std::string>().rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("orient") {
    const auto tc = run_json({"orient", "--kind", "tc", data("two_cycle.json")});
    CHECK(tc["results"]["count"] == 1);
    const auto& cls = tc["results"]["classes"][0];
    CHECK(cls["S"] == nlohmann::json::array());
    CHECK(cls["degree"]["u"] == 0);
    CHECK(cls["degree"]["v"] == 0);

    const auto rooted = run_json({"orient", "--kind", "rooted", data("four_cycle.json")});
    CHECK(rooted["results"]["count"] == 4);

    const auto bridged = run_json({"orient", "--kind", "tc", data("bridged.json")});
    CHECK(bridged["results"]["classes"] == nlohmann::json::array());
    CHECK(bridged["results"]["empty"] == true);
    CHECK(bridged["results"]["count"] == 0);
}

TEST_CASE("info and trees") {
    const auto info = run_json({"info", data("bridged.json")});
    CHECK(info["results"]["first_betti"] == 2);
    CHECK(info["results"]["bridges"] == nlohmann::json::array({"bridge"}));
    CHECK(info["results"]["legs"] == 1);
    const auto trees = run_json({"trees", data("k4.json")});
    CHECK(trees["results"]["spanning_trees"] == 16);
    CHECK(trees["results"]["deletion_contraction"] == 16);
}

TEST_CASE("posets and strata") {
    CHECK(run_json({"poset", "--kind", "c", data("theta.json")})["results"]["size"] == 7);
    CHECK(run_json({"poset", "--kind", "op0", data("theta.json")})["results"]["size"] == 6);
    CHECK(run_json({"poset", "--kind", "op1", data("two_cycle.json")})["results"]["size"] == 4);
    for (const char* model : {"neron", "picg1", "picg", "tropical"}) {
        const auto j = run_json({"strata", "--model", model, data("four_cycle.json")});
        for (const auto& c : j["verification"]) CHECK(c["passed"] == true);
    }
    const Run dot = run({"strata", "--model", "neron", "--format", "dot", data("two_cycle.json")});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    CHECK(dot.out.find("->") != std::string::npos);
}

TEST_CASE("tropical and modspace") {
    const auto t = run_json({"tropical", data("theta.json")});
    CHECK(t["results"]["f_vector"] == nlohmann::json::array({3, 6, 3}));
    CHECK(t["results"]["euler_characteristic"] == 0);
    const auto m = run_json({"modspace", "--genus", "2", "--legs", "0"});
    CHECK(m["results"]["size"] == 7);
    CHECK(run({"modspace", "--genus", "1", "--legs", "0"}).code == cjac::cli::kInputError);
}

TEST_CASE("verify") {
    const auto j = run_json({"verify", "--all", "--max-edges", "3", "--max-vertices", "3"});
    CHECK(j["verification"].size() == 11);
    for (const auto& c : j["verification"]) CHECK(c["passed"] == true);
}

TEST_CASE("text output is deterministic") {
    const Run a = run({"poset", "--kind", "op1", data("theta.json")});
    const Run b = run({"poset", "--kind", "op1", data("theta.json")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("status: ok") != std::string::npos);
}

TEST_CASE("input errors") {
    const Run missing = run({"phi", "/nonexistent.json"});
    CHECK(missing.code == cjac::cli::kInputError);
    const Run bad = run({"phi", temp_file("bad.json", R"({"vertices": [{"id": "a"}], "edges": [{"id": "e", "ends": ["a"]}]})")});
    CHECK(bad.code == cjac::cli::kInputError);
    CHECK(bad.err.find("/edges/0/ends") != std::string::npos);
    const Run syntax = run({"info", temp_file("syntax.json", "{\"vertices\": [")});
    CHECK(syntax.code == cjac::cli::kInputError);
    CHECK(syntax.err.find("byte") != std::string::npos);
    CHECK(run({"phi", temp_file("split.json", R"({"vertices": [{"id": "a"}, {"id": "b"}]})")}).code ==
          cjac::cli::kInputError);
    CHECK(run({"frobnicate"}).code == cjac::cli::kInputError);
    CHECK(run({"orient", "--kind", "sideways", data("theta.json")}).code == cjac::cli::kInputError);
    CHECK(run({"--help"}).code == cjac::cli::kOk);
}

}
