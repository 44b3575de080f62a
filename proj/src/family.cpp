#include "cjac/family.hpp"

#include <set>
#include <stdexcept>

namespace cjac {

std::vector<WeightedGraph> multigraph_family(std::size_t max_vertices, std::size_t max_edges, bool connected_only) {
    std::vector<WeightedGraph> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        WeightedGraph empty;
        for (std::size_t v = 0; v < n; ++v) empty.add_vertex();
        std::vector<CanonicalForm> level{canonical_form(empty)};
        for (std::size_t m = 0;; ++m) {
            for (const CanonicalForm& f : level) {
                WeightedGraph g = graph_from_canonical(f);
                if (!connected_only || is_connected(g)) out.push_back(std::move(g));
            }
            if (m == max_edges) break;
            // every multigraph with m + 1 edges is one with m edges plus an edge
            std::set<CanonicalForm> next;
            for (const CanonicalForm& f : level) {
                const WeightedGraph g = graph_from_canonical(f);
                for (VertexIndex a = 0; a < n; ++a)
                    for (VertexIndex b = a; b < n; ++b) {
                        WeightedGraph h = g;
                        h.add_edge(a, b);
                        next.insert(canonical_form(h));
                    }
            }
            level.assign(next.begin(), next.end());
        }
    }
    return out;
}

WeightedGraph with_weights(const WeightedGraph& g, std::span<const int> weights) {
    if (weights.size() != g.vertex_count()) throw std::invalid_argument("with_weights: one weight per vertex");
    WeightedGraph out = g;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.set_weight(v, weights[v]);
    return out;
}

}  // namespace cjac
