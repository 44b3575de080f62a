#include "doctest.h"

#include <random>

#include "cjac/family.hpp"
#include "cjac/homology.hpp"
#include "cjac/tropical.hpp"
#include "support.hpp"

using namespace cjac;
using namespace cjac::test;

TEST_SUITE("tropical") {

TEST_CASE("jacobian dimension") {
    CHECK(jacobian_dimension(MetricGraph(path(4))) == 0);
    CHECK(jacobian_dimension(MetricGraph(theta(1, 1))) == 2);
    CHECK(jacobian_dimension(MetricGraph(banana(2))) == 1);
    CHECK_THROWS_AS(jacobian_dimension(MetricGraph(banana(2), {1.0, kInfiniteLength})), std::invalid_argument);
}

TEST_CASE("metric graph validation") {
    CHECK_THROWS_AS(MetricGraph(banana(2), {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MetricGraph(banana(2), {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(MetricGraph(banana(2), {1.0, -2.0}), std::invalid_argument);
    CHECK(MetricGraph(banana(2), {1.0, kInfiniteLength}).lengths().size() == 2);
    CHECK_FALSE(MetricGraph(banana(2), {1.0, kInfiniteLength}).is_compact());
}

TEST_CASE("cell complexes") {
    const auto c2 = pic_g_cell_complex(MetricGraph(banana(2)));
    CHECK(f_vector(c2) == std::vector<std::size_t>{2, 2});
    CHECK(euler_characteristic(c2) == 0);

    const auto th = pic_g_cell_complex(MetricGraph(theta()));
    CHECK(f_vector(th) == std::vector<std::size_t>{3, 6, 3});
    CHECK(euler_characteristic(th) == 0);
    CHECK(verify_graded(th).passed());

    const auto tree = pic_g_cell_complex(MetricGraph(path(3)));
    CHECK(f_vector(tree) == std::vector<std::size_t>{1});
    CHECK(euler_characteristic(tree) == 1);

    // K4: 16 top cells on a 3-torus
    const auto k4 = pic_g_cell_complex(MetricGraph(complete(4)));
    CHECK(f_vector(k4).back() == 16);
    CHECK(euler_characteristic(k4) == 0);

    CHECK_THROWS_AS(pic_g_cell_complex(MetricGraph(banana(2), {1.0, kInfiniteLength})), std::invalid_argument);
    WeightedGraph two;
    two.add_vertex();
    two.add_vertex();
    CHECK_THROWS_AS(pic_g_cell_complex(MetricGraph(two)), std::invalid_argument);
}

TEST_CASE("faces") {
    const auto c2 = pic_g_cell_complex(MetricGraph(banana(2)));
    // each arc has both points as faces
    for (std::size_t a = 0; a < c2.size(); ++a)
        for (std::size_t b = 0; b < c2.size(); ++b)
            if (c2.cells[a].dim == 0 && c2.cells[b].dim == 1) CHECK(c2.face_order.leq(a, b));
    for (const auto& cell : c2.cells) CHECK(cell.dim == static_cast<int>(cell.label.removed.size()));
}

TEST_CASE("top cells and lengths") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> len(0.1, 10.0);
    for (const auto& g : multigraph_family(4, 5, true)) {
        const auto unit = pic_g_cell_complex(MetricGraph(g));
        const auto f = f_vector(unit);
        CHECK(f.size() == static_cast<std::size_t>(first_betti(g)) + 1);
        CHECK(BigInt(f.back()) == spanning_tree_count(g));
        std::vector<double> l(g.edge_count());
        for (auto& x : l) x = len(rng);
        const auto scaled = pic_g_cell_complex(MetricGraph(g, l));
        CHECK(f_vector(scaled) == f);
        REQUIRE(scaled.size() == unit.size());
        for (std::size_t a = 0; a < unit.size(); ++a) CHECK(scaled.face_order.up_set(a) == unit.face_order.up_set(a));
    }
}

}
