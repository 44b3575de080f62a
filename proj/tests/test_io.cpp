#include "doctest.h"

#include <cmath>

#include "cjac/io.hpp"
#include "support.hpp"

using namespace cjac;
using namespace cjac::test;

TEST_SUITE("io") {

TEST_CASE("parse") {
    const auto doc = parse_graph_document(R"({
      "vertices": [{"id": "a", "weight": 1, "legs": 2}, {"id": "b"}],
      "edges": [{"id": "x", "ends": ["a", "b"]}, {"id": "y", "ends": ["b", "b"]}]
    })");
    const auto& g = doc.graph;
    REQUIRE(g.vertex_count() == 2);
    CHECK(g.vertex(0).name == "a");
    CHECK(g.vertex(0).weight == 1);
    CHECK(g.vertex(0).legs == 2);
    CHECK(g.vertex(1).weight == 0);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0].name == "x");
    CHECK(g.edges()[0].id.value < g.edges()[1].id.value);
    CHECK(g.edges()[1].is_loop());
    CHECK_FALSE(doc.lengths.has_value());
}

TEST_CASE("lengths") {
    const auto doc = parse_graph_document(R"({
      "vertices": [{"id": "a"}, {"id": "b"}],
      "edges": [{"id": "x", "ends": ["a", "b"]}, {"id": "y", "ends": ["a", "b"]}],
      "lengths": {"y": "inf", "x": 2.5}
    })");
    REQUIRE(doc.lengths.has_value());
    CHECK((*doc.lengths)[0] == 2.5);
    CHECK(std::isinf((*doc.lengths)[1]));
}

TEST_CASE("round trip") {
    auto g = theta(1, 0);
    g.set_legs(1, 2);
    std::vector<double> lengths = {1.0, 0.5, 3.0};
    const auto doc = parse_graph_document(write_graph_document(g, &lengths));
    CHECK(doc.graph == g);
    CHECK(*doc.lengths == lengths);
}

TEST_CASE("malformed input names the location") {
    auto message = [](const char* text) {
        try {
            parse_graph_document(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(R"({"vertices": [{"id": "a"}], )").find("byte") != std::string::npos);
    CHECK(message(R"({"vertices": [{"id": "a", "weight": -1}]})").find("/vertices/0/weight") != std::string::npos);
    CHECK(message(R"({"vertices": [{"id": "a"}, {"id": "a"}]})").find("/vertices/1/id") != std::string::npos);
    CHECK(message(R"({"vertices": [{"id": "a"}], "edges": [{"id": "e", "ends": ["a", "z"]}]})")
              .find("/edges/0/ends/1") != std::string::npos);
    CHECK(message(R"({"vertices": [{"id": "a"}], "colour": 3})").find("unknown field") != std::string::npos);
    CHECK(message(R"({"vertices": [{"id": "a"}], "edges": [{"id": "e", "ends": ["a", "a"]}], "lengths": {"e": 0}})")
              .find("positive") != std::string::npos);
    CHECK(message(R"({"vertices": [{"id": "a"}], "edges": [{"id": "e", "ends": ["a", "a"]}], "lengths": {}})")
              .find("no length") != std::string::npos);
    CHECK(message(R"({"edges": []})").find("missing field") != std::string::npos);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.json"), InputError);
}

}
