#pragma once

// Bitmask helpers shared by the enumeration-heavy modules. Edge masks are over
// edge positions of one ambient graph, vertex masks over vertex positions.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cjac/graph.hpp"

namespace cjac::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskBits = 63;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

template <class F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        const int i = std::countr_zero(m);
        f(static_cast<std::size_t>(i));
        m &= m - 1;
    }
}

inline void require_enumerable(const WeightedGraph& g, const char* what) {
    if (g.edge_count() > kMaxMaskBits || g.vertex_count() > kMaxMaskBits)
        throw std::length_error(std::string(what) + ": graph too large for exhaustive enumeration");
}

/// Per-vertex neighbourhoods and edge endpoints of a fixed ambient graph,
/// for fast queries on spanning subgraphs given as edge masks.
struct MaskGraph {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> tail;  // edge position -> first endpoint
    std::vector<std::size_t> head;  // edge position -> second endpoint
    std::vector<int> weight;
    Mask loops = 0;

    explicit MaskGraph(const WeightedGraph& g) : n(g.vertex_count()), m(g.edge_count()) {
        require_enumerable(g, "MaskGraph");
        for (const Edge& e : g.edges()) {
            tail.push_back(e.u);
            head.push_back(e.v);
            if (e.is_loop()) loops |= bit(tail.size() - 1);
        }
        for (const Vertex& v : g.vertices()) weight.push_back(v.weight);
    }

    Mask all_edges() const { return low_bits(m); }
    Mask all_vertices() const { return low_bits(n); }

    /// Vertex masks of the connected components of (V, kept).
    struct Components {
        std::array<Mask, 64> mask;
        std::size_t count = 0;
        const Mask* begin() const { return mask.data(); }
        const Mask* end() const { return mask.data() + count; }
        std::size_t size() const { return count; }
    };

    Components components(Mask kept) const {
        std::array<Mask, 64> nbr;
        std::fill_n(nbr.begin(), n, Mask{0});
        for_each_bit(kept & ~loops, [&](std::size_t e) {
            nbr[tail[e]] |= bit(head[e]);
            nbr[head[e]] |= bit(tail[e]);
        });
        Components out;
        Mask unseen = all_vertices();
        while (unseen) {
            Mask comp = unseen & (~unseen + 1);
            Mask frontier = comp;
            while (frontier) {
                Mask next = 0;
                for_each_bit(frontier, [&](std::size_t v) { next |= nbr[v]; });
                frontier = next & ~comp;
                comp |= next;
            }
            out.mask[out.count++] = comp;
            unseen &= ~comp;
        }
        return out;
    }

    int component_count(Mask kept) const { return static_cast<int>(components(kept).size()); }

    bool connected(Mask kept) const { return component_count(kept) == 1; }

    int first_betti(Mask kept) const {
        return std::popcount(kept) - static_cast<int>(n) + component_count(kept);
    }

    int genus(Mask kept) const {
        int h = 0;
        for (int w : weight) h += w;
        return first_betti(kept) + h;
    }
};

}  // namespace cjac::detail
