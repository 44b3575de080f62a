#include "doctest.h"

#include "cjac/suites.hpp"
#include "support.hpp"

using namespace cjac;

TEST_SUITE("suites") {

TEST_CASE("every suite passes on a small family") {
    suites::Options opt;
    opt.max_vertices = 3;
    opt.max_edges = 4;
    opt.length_trials = 2;
    for (const auto& s : suites::all_suites()) {
        CAPTURE(s.name);
        const auto o = s.run(opt);
        CHECK(o.name == s.name);
        CHECK(o.passed);
        CHECK(o.witness.empty());
        CHECK(o.cases > 0);
    }
}

TEST_CASE("outcomes do not depend on the worker count") {
    suites::Options one;
    one.max_vertices = 3;
    one.max_edges = 4;
    one.workers = 1;
    suites::Options four = one;
    four.workers = 4;
    const auto a = suites::kirchhoff(one);
    const auto b = suites::kirchhoff(four);
    CHECK(a.cases == b.cases);
    CHECK(a.passed == b.passed);
    CHECK(suites::worker_count(four) == 4);
}

TEST_CASE("describe") {
    CHECK(suites::describe(test::banana(2)).find("V=2") == 0);
}

}
