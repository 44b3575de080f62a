#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cjac/graph.hpp"

namespace cjac {

/// One representative per isomorphism class of multigraphs (loops allowed,
/// weights and legs zero) with 1..max_vertices vertices and at most max_edges
/// edges. Ordered by vertex count, then edge count, then canonical form.
std::vector<WeightedGraph> multigraph_family(std::size_t max_vertices, std::size_t max_edges,
                                             bool connected_only = false);

/// Copy of g with the given vertex weights.
WeightedGraph with_weights(const WeightedGraph& g, std::span<const int> weights);

}  // namespace cjac
