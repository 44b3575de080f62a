#include "doctest.h"

#include <algorithm>
#include <set>

#include "cjac/family.hpp"
#include "cjac/modspace.hpp"
#include "cjac/strata.hpp"
#include "cjac/suites.hpp"
#include "support.hpp"

using namespace cjac;
using namespace cjac::test;

namespace {

/// Stable graphs of type (g, n) by decorating every connected multigraph with
/// weights and legs in all ways, deduplicated by permutation search.
std::vector<WeightedGraph> stable_graphs_oracle(int g, int n) {
    const std::size_t max_v = static_cast<std::size_t>(2 * g - 2 + n);
    const std::size_t max_e = static_cast<std::size_t>(3 * g - 3 + n);
    std::vector<WeightedGraph> found;
    for (const auto& shape : multigraph_family(max_v, max_e, true)) {
        const int b1 = first_betti(shape);
        if (b1 > g) continue;
        const std::size_t k = shape.vertex_count();
        std::vector<int> w(k, 0), legs(k, 0);
        // odometer over weights 0..g and legs 0..n
        while (true) {
            int wsum = 0, lsum = 0;
            for (std::size_t v = 0; v < k; ++v) {
                wsum += w[v];
                lsum += legs[v];
            }
            if (wsum + b1 == g && lsum == n) {
                WeightedGraph cand = with_weights(shape, w);
                for (std::size_t v = 0; v < k; ++v) cand.set_legs(v, legs[v]);
                if (is_stable(cand) &&
                    std::none_of(found.begin(), found.end(),
                                 [&](const WeightedGraph& f) { return suites::isomorphic_by_search(f, cand); }))
                    found.push_back(cand);
            }
            std::size_t pos = 0;
            for (; pos < 2 * k; ++pos) {
                int& digit = pos < k ? w[pos] : legs[pos - k];
                const int top = pos < k ? g : n;
                if (digit < top) {
                    ++digit;
                    break;
                }
                digit = 0;
            }
            if (pos == 2 * k) break;
        }
    }
    return found;
}

}  // namespace

TEST_SUITE("modspace") {

TEST_CASE("pinned counts") {
    CHECK(enumerate_stable_graphs(0, 3).size() == 1);
    CHECK(enumerate_stable_graphs(0, 4).size() == 2);
    CHECK(enumerate_stable_graphs(0, 5).size() == 3);
    CHECK(enumerate_stable_graphs(1, 1).size() == 2);
    CHECK(enumerate_stable_graphs(1, 2).size() == 5);
    CHECK(enumerate_stable_graphs(2, 0).size() == 7);
    CHECK(enumerate_stable_graphs(3, 0).size() == 42);
    CHECK_THROWS_AS(enumerate_stable_graphs(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_stable_graphs(0, 2), std::invalid_argument);
}

TEST_CASE("enumeration against decoration oracle") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
        CAPTURE(g);
        CAPTURE(n);
        const auto got = enumerate_stable_graphs(g, n);
        const auto expected = stable_graphs_oracle(g, n);
        CHECK(got.size() == expected.size());
        for (const auto& x : expected)
            CHECK(std::any_of(got.begin(), got.end(), [&](const WeightedGraph& y) { return is_isomorphic(x, y); }));
        for (const auto& x : got) {
            CHECK(is_stable(x));
            CHECK(genus(x) == g);
            CHECK(x.total_legs() == n);
            CHECK(static_cast<int>(x.edge_count()) <= 3 * g - 3 + n);
        }
        const bool maximal = std::any_of(got.begin(), got.end(), [&](const WeightedGraph& y) {
            return static_cast<int>(y.edge_count()) == 3 * g - 3 + n;
        });
        CHECK(maximal);
    }
}

TEST_CASE("contraction order") {
    const auto gs = enumerate_stable_graphs(1, 1);
    const auto smooth = *std::find_if(gs.begin(), gs.end(), [](const WeightedGraph& x) { return x.edge_count() == 0; });
    const auto loop = *std::find_if(gs.begin(), gs.end(), [](const WeightedGraph& x) { return x.edge_count() == 1; });
    CHECK(contraction_geq(smooth, loop));
    CHECK_FALSE(contraction_geq(loop, smooth));
    CHECK(contraction_geq(loop, loop));
    CHECK_THROWS_AS(contraction_geq(smooth, single_vertex(0, 0, 3)), std::invalid_argument);
}

TEST_CASE("stratum dimension") {
    CHECK(stratum_dimension(single_vertex(2, 0, 1)) == 4);
    CHECK(stratum_dimension(single_vertex(0, 1, 1)) == 0);
    CHECK(stratum_dimension(theta()) == 0);
    for (const auto& x : enumerate_stable_graphs(2, 0))
        CHECK(stratum_dimension(x) == 3 - static_cast<int>(x.edge_count()));
    CHECK_THROWS_AS(stratum_dimension(banana(2)), std::invalid_argument);
}

TEST_CASE("posets") {
    const auto p03 = stable_graph_poset(0, 3);
    CHECK(p03.size() == 1);
    CHECK(p03.dim == std::vector<int>{0});

    const auto p11 = stable_graph_poset(1, 1);
    REQUIRE(p11.size() == 2);
    CHECK(p11.order.covers().size() == 1);
    const auto [lo, hi] = p11.order.covers()[0];
    CHECK(p11.dim[lo] == 0);
    CHECK(p11.dim[hi] == 1);

    for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 3}, {0, 5}, {3, 0}}) {
        const auto p = stable_graph_poset(g, n);
        CHECK(verify_graded(p.order, p.dim).passed());
        REQUIRE(p.order.maximal_elements().size() == 1);
        CHECK(p.dim[p.order.maximal_elements()[0]] == 3 * g - 3 + n);
        CHECK(*std::min_element(p.dim.begin(), p.dim.end()) == 0);
        for (auto [a, b] : p.order.covers()) {
            CHECK(p.elements[a].edge_count() == p.elements[b].edge_count() + 1);
            CHECK(p.dim[b] == p.dim[a] + 1);
        }
        // order agrees with contraction_geq
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b)
                CHECK(p.order.leq(a, b) == contraction_geq(p.elements[b], p.elements[a]));
        const auto dual = p.dual_order();
        CHECK(dual.minimal_elements() == p.order.maximal_elements());
    }
    CHECK(stable_graph_poset(2, 0).size() == 7);
}

}
