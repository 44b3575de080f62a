#pragma once

// Small graph builders and brute-force oracles for the test suites. The
// oracles use nothing from the library beyond the graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cjac/graph.hpp"

namespace cjac::test {

inline WeightedGraph cycle(std::size_t n, std::vector<int> weights = {}) {
    WeightedGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), weights.empty() ? 0 : weights[v]);
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, "e" + std::to_string(v));
    return g;
}

/// Two vertices joined by k parallel edges: k = 2 is the 2-cycle, k = 3 the theta graph.
inline WeightedGraph banana(int k, int h0 = 0, int h1 = 0) {
    WeightedGraph g;
    g.add_vertex("u", h0);
    g.add_vertex("v", h1);
    for (int i = 0; i < k; ++i) g.add_edge(0, 1, "e" + std::to_string(i));
    return g;
}

inline WeightedGraph theta(int h0 = 0, int h1 = 0) { return banana(3, h0, h1); }

inline WeightedGraph path(std::size_t n) {
    WeightedGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, "e" + std::to_string(v));
    return g;
}

inline WeightedGraph complete(std::size_t n) {
    WeightedGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

inline WeightedGraph single_vertex(int h = 0, int loops = 0, int legs = 0) {
    WeightedGraph g;
    g.add_vertex("v", h, legs);
    for (int i = 0; i < loops; ++i) g.add_edge(0, 0);
    return g;
}

struct Ends {
    std::size_t u, v;
};

inline std::vector<Ends> ends_of(const WeightedGraph& g) {
    std::vector<Ends> out;
    for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
    return out;
}

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

/// Components of (V, edges in `keep`) by union-find.
inline std::size_t components_oracle(std::size_t n, const std::vector<Ends>& e, std::uint64_t keep) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t count = n;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!((keep >> i) & 1)) continue;
        auto a = find_root(parent, e[i].u), b = find_root(parent, e[i].v);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

/// Spanning trees by checking every (|V|-1)-subset of edges.
inline long long tree_count_by_subsets(const WeightedGraph& g) {
    const auto e = ends_of(g);
    const std::size_t n = g.vertex_count();
    long long count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s)
        if (static_cast<std::size_t>(std::popcount(s)) + 1 == n && components_oracle(n, e, s) == 1) ++count;
    return count;
}

/// Transitive closure reachability on a digraph given by arcs.
inline std::vector<std::vector<bool>> reach(std::size_t n, const std::vector<Ends>& arcs) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
    for (const auto& a : arcs) r[a.u][a.v] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

/// Multidegrees of totally cyclic orientations of the whole graph, by trying
/// every direction assignment and checking strong connectivity per component.
inline std::set<std::vector<int>> tc_degrees_oracle(const WeightedGraph& g) {
    const auto e = ends_of(g);
    const std::size_t n = g.vertex_count();
    std::set<std::vector<int>> out;
    for (std::uint64_t dir = 0; dir < (std::uint64_t{1} << e.size()); ++dir) {
        std::vector<Ends> arcs;
        std::vector<int> d(n);
        for (std::size_t v = 0; v < n; ++v) d[v] = g.vertex(v).weight - 1;
        bool skip = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const bool flip = (dir >> i) & 1;
            if (e[i].u == e[i].v && flip) skip = true;  // a loop has one direction
            const Ends a = flip ? Ends{e[i].v, e[i].u} : e[i];
            arcs.push_back(a);
            ++d[a.v];
        }
        if (skip) continue;
        const auto r = reach(n, arcs);
        bool tc = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (r[a][b] && !r[b][a]) tc = false;
        if (tc) out.insert(d);
    }
    return out;
}

/// Multidegrees of rooted 1-orientations of the whole graph.
inline std::set<std::vector<int>> rooted_degrees_oracle(const WeightedGraph& g) {
    const auto e = ends_of(g);
    const std::size_t n = g.vertex_count();
    std::set<std::vector<int>> out;
    if (e.empty()) {
        if (n == 1) out.insert({g.vertex(0).weight});
        return out;
    }
    for (std::size_t b = 0; b < e.size(); ++b) {
        for (std::uint64_t dir = 0; dir < (std::uint64_t{1} << e.size()); ++dir) {
            if ((dir >> b) & 1) continue;
            std::vector<Ends> arcs;
            std::vector<int> d(n);
            for (std::size_t v = 0; v < n; ++v) d[v] = g.vertex(v).weight - 1;
            bool skip = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i == b) {
                    arcs.push_back(e[i]);
                    arcs.push_back({e[i].v, e[i].u});
                    ++d[e[i].u];
                    ++d[e[i].v];
                    continue;
                }
                const bool flip = (dir >> i) & 1;
                if (e[i].u == e[i].v && flip) skip = true;
                const Ends a = flip ? Ends{e[i].v, e[i].u} : e[i];
                arcs.push_back(a);
                ++d[a.v];
            }
            if (skip) continue;
            const auto r = reach(n, arcs);
            bool rooted = true;
            for (std::size_t v = 0; v < n; ++v) rooted = rooted && (r[e[b].u][v] || r[e[b].v][v]);
            if (rooted) out.insert(d);
        }
    }
    return out;
}

}  // namespace cjac::test
