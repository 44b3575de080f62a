#pragma once

#include <vector>

#include "cjac/graph.hpp"
#include "cjac/poset.hpp"

namespace cjac {

/// Stable graphs of genus g with n (unlabeled) legs, up to isomorphism, in
/// canonical-form order. Requires 2g - 2 + n > 0.
std::vector<WeightedGraph> enumerate_stable_graphs(int genus, int legs);

/// True when `coarser` is isomorphic to finer / S for some edge set S of `finer`.
bool contraction_geq(const WeightedGraph& coarser, const WeightedGraph& finer);

/// Sum over vertices of 3h(v) - 3 + valence(v); equals 3g - 3 + n - |E|.
int stratum_dimension(const WeightedGraph& g);

struct StableGraphPoset {
    int genus = 0;
    int legs = 0;
    std::vector<WeightedGraph> elements;
    /// a <= b when b is a contraction of a; the smooth graph is the maximum.
    Poset order;
    std::vector<int> dim;

    std::size_t size() const { return elements.size(); }
    /// The opposite order, which governs the tropical moduli space.
    Poset dual_order() const { return order.dual(); }
};

StableGraphPoset stable_graph_poset(int genus, int legs);

}  // namespace cjac
