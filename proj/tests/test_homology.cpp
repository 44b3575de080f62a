#include "doctest.h"

#include <random>

#include "cjac/family.hpp"
#include "cjac/homology.hpp"
#include "cjac/orientations.hpp"
#include "support.hpp"

using namespace cjac;
using namespace cjac::test;

namespace {

std::vector<long long> factors(const WeightedGraph& g, VertexIndex removed = 0) {
    std::vector<long long> out;
    for (const auto& d : component_group(g, removed).invariant_factors) out.push_back(static_cast<long long>(d));
    return out;
}

bool diagonal_matches(const SmithNormalForm& s, const IntegerMatrix& m) {
    const IntegerMatrix d = s.left * m * s.right;
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
            const BigInt expected = r == c && r < s.diagonal.size() ? s.diagonal[r] : BigInt(0);
            if (d(r, c) != expected && !(r == c && d(r, c) == -expected)) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("boundary and coboundary") {
    const auto edge = path(2);
    const auto b = boundary_matrix(edge, Orientation::reference(edge));
    CHECK(b == IntegerMatrix(2, 1, {1, -1}));

    const auto loop = single_vertex(0, 1);
    CHECK(boundary_matrix(loop, Orientation::reference(loop)) == IntegerMatrix(1, 1, {0}));

    const auto c2 = banana(2);
    CHECK(boundary_matrix(c2, Orientation::reference(c2)) == IntegerMatrix(2, 2, {1, 1, -1, -1}));

    const auto cb = coboundary_matrix(edge, Orientation::reference(edge));
    CHECK(cb(0, 0) == 1);

    WeightedGraph iso = path(2);
    iso.add_vertex("lonely");
    const auto cbi = coboundary_matrix(iso, Orientation::reference(iso));
    CHECK(cbi(0, 2) == 0);

    const auto th = theta();
    const auto ref = Orientation::reference(th);
    CHECK(coboundary_matrix(th, ref) == boundary_matrix(th, ref).transpose());

    Orientation partial;
    CHECK_THROWS(boundary_matrix(th, partial));
}

TEST_CASE("laplacian") {
    CHECK(laplacian(banana(2)) == IntegerMatrix(2, 2, {2, -2, -2, 2}));
    CHECK(laplacian(single_vertex(0, 1)) == IntegerMatrix(1, 1, {0}));
    CHECK(laplacian(cycle(4)) == IntegerMatrix(4, 4, {2, -1, 0, -1, -1, 2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2}));

    // any reference orientation gives the same product
    std::mt19937_64 rng(7);
    for (const auto& g : multigraph_family(4, 5, true)) {
        std::map<EdgeId, VertexIndex> src;
        for (const Edge& e : g.edges()) src[e.id] = rng() % 2 ? e.u : e.v;
        const auto o = Orientation::from_sources(g, src);
        CHECK(boundary_matrix(g, o) * coboundary_matrix(g, o) == laplacian(g));
    }
}

TEST_CASE("smith normal form") {
    const auto id = smith_normal_form(IntegerMatrix::identity(2));
    CHECK(id.diagonal == std::vector<BigInt>{1, 1});

    const IntegerMatrix m(2, 2, {2, -2, -2, 2});
    const auto s = smith_normal_form(m);
    CHECK(s.diagonal == std::vector<BigInt>{2, 0});
    CHECK(diagonal_matches(s, m));

    const auto z = smith_normal_form(IntegerMatrix(2, 3));
    CHECK(z.diagonal == std::vector<BigInt>{0, 0});

    // diag(2, 3) ~ diag(1, 6)
    const IntegerMatrix twothree(2, 2, {2, 0, 0, 3});
    CHECK(smith_normal_form(twothree).diagonal == std::vector<BigInt>{1, 6});

    const IntegerMatrix rect(2, 3, {4, 6, 8, 10, 12, 14});
    const auto r = smith_normal_form(rect);
    CHECK(r.diagonal == std::vector<BigInt>{2, 6});  // gcd of 2x2 minors is 12
    CHECK(diagonal_matches(r, rect));
    CHECK(abs(determinant(r.left)) == 1);
    CHECK(abs(determinant(r.right)) == 1);
}

TEST_CASE("determinant") {
    CHECK(determinant(IntegerMatrix(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2})) == 6);
    CHECK(determinant(IntegerMatrix(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 1})) == 0);
    CHECK(determinant(IntegerMatrix(2, 2, {1, 2, 2, 4})) == 0);
    CHECK(determinant(IntegerMatrix(0, 0)) == 1);
}

TEST_CASE("component group") {
    CHECK(factors(banana(2)) == std::vector<long long>{2});
    CHECK(component_group(cycle(4)).order() == 4);
    CHECK(factors(cycle(4)) == std::vector<long long>{4});
    CHECK(factors(path(5)).empty());
    CHECK(component_group(path(5)).order() == 1);
    CHECK(factors(complete(4)) == std::vector<long long>{4, 4});
    CHECK(factors(theta()) == std::vector<long long>{3});
    // independent of the removed vertex
    for (VertexIndex v = 0; v < 4; ++v) CHECK(factors(complete(4), v) == std::vector<long long>{4, 4});

    WeightedGraph two;
    two.add_vertex();
    two.add_vertex();
    CHECK_THROWS_AS(component_group(two), std::invalid_argument);
}

TEST_CASE("spanning trees") {
    for (std::size_t n = 2; n <= 7; ++n) CHECK(spanning_tree_count(cycle(n)) == n);
    CHECK(spanning_tree_count(theta()) == 3);
    CHECK(spanning_tree_count(path(6)) == 1);
    CHECK(spanning_tree_count_oracle(banana(2)) == 2);
    CHECK(spanning_tree_count_oracle(cycle(4)) == 4);
    CHECK(spanning_tree_count_oracle(complete(4)) == 16);
    CHECK(spanning_tree_count(complete(5)) == 125);

    for (const auto& g : multigraph_family(4, 6, true)) {
        const long long oracle = tree_count_by_subsets(g);
        CHECK(spanning_tree_count(g) == oracle);
        CHECK(spanning_tree_count_oracle(g) == oracle);
        CHECK(component_group(g).order() == oracle);
    }
}

TEST_CASE("loops change nothing") {
    auto g = cycle(3);
    g.add_edge(1, 1);
    CHECK(spanning_tree_count(g) == 3);
    CHECK(factors(g) == std::vector<long long>{3});
}

}
