#include "cjac/modspace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "bits.hpp"

namespace cjac {

namespace {

void require_hyperbolic(int genus, int legs) {
    if (genus < 0 || legs < 0 || 2 * genus - 2 + legs <= 0)
        throw std::invalid_argument("stable graphs need 2g - 2 + n > 0");
}

bool vertex_stable(int weight, int valence) { return 2 * weight - 2 + valence > 0; }

/// Every graph G' with one more edge such that contracting that edge gives g.
std::vector<WeightedGraph> one_edge_degenerations(const WeightedGraph& g) {
    std::vector<WeightedGraph> out;
    const std::size_t n = g.vertex_count();

    // a weight unit of v becomes a loop at v
    for (VertexIndex v = 0; v < n; ++v) {
        if (g.vertex(v).weight == 0) continue;
        WeightedGraph d = g;
        d.set_weight(v, g.vertex(v).weight - 1);
        d.add_edge(v, v);
        out.push_back(std::move(d));
    }

    // v splits into v and a new vertex w joined by a new edge
    for (VertexIndex v = 0; v < n; ++v) {
        std::vector<std::size_t> ends;   // non-loop edges at v
        std::vector<std::size_t> loops;  // loops at v
        for (std::size_t p = 0; p < g.edge_count(); ++p) {
            const Edge& e = g.edges()[p];
            if (e.is_loop() && e.u == v)
                loops.push_back(p);
            else if (e.u == v || e.v == v)
                ends.push_back(p);
        }
        const int h = g.vertex(v).weight;
        const int l = g.vertex(v).legs;
        std::size_t loop_choices = 1;
        for (std::size_t i = 0; i < loops.size(); ++i) loop_choices *= 3;

        for (int h1 = 0; h1 <= h; ++h1)
            for (int l1 = 0; l1 <= l; ++l1)
                for (detail::Mask moved = 0; moved < (detail::Mask{1} << ends.size()); ++moved)
                    for (std::size_t code = 0; code < loop_choices; ++code) {
                        // loop fate: 0 stays at v, 1 moves to w, 2 becomes a v-w edge
                        std::vector<int> fate(loops.size());
                        std::size_t c = code;
                        for (auto& f : fate) {
                            f = static_cast<int>(c % 3);
                            c /= 3;
                        }
                        int val_v = l1 + 1, val_w = (l - l1) + 1;
                        for (std::size_t i = 0; i < ends.size(); ++i) ((moved >> i) & 1u ? val_w : val_v) += 1;
                        for (int f : fate) {
                            if (f == 0) val_v += 2;
                            if (f == 1) val_w += 2;
                            if (f == 2) ++val_v, ++val_w;
                        }
                        if (!vertex_stable(h1, val_v) || !vertex_stable(h - h1, val_w)) continue;

                        WeightedGraph d;
                        for (VertexIndex u = 0; u < n; ++u)
                            d.add_vertex(u == v ? h1 : g.vertex(u).weight, u == v ? l1 : g.vertex(u).legs);
                        const VertexIndex w = d.add_vertex(h - h1, l - l1);
                        for (std::size_t p = 0; p < g.edge_count(); ++p) {
                            const Edge& e = g.edges()[p];
                            auto at = [&](VertexIndex x, bool to_w) { return x == v && to_w ? w : x; };
                            if (auto it = std::find(ends.begin(), ends.end(), p); it != ends.end()) {
                                const bool to_w = (moved >> (it - ends.begin())) & 1u;
                                d.add_edge(at(e.u, to_w), at(e.v, to_w));
                            } else if (auto jt = std::find(loops.begin(), loops.end(), p); jt != loops.end()) {
                                const int f = fate[static_cast<std::size_t>(jt - loops.begin())];
                                if (f == 0) d.add_edge(v, v);
                                if (f == 1) d.add_edge(w, w);
                                if (f == 2) d.add_edge(v, w);
                            } else {
                                d.add_edge(e.u, e.v);
                            }
                        }
                        d.add_edge(v, w);
                        out.push_back(std::move(d));
                    }
    }
    return out;
}

}  // namespace

std::vector<WeightedGraph> enumerate_stable_graphs(int genus, int legs) {
    require_hyperbolic(genus, legs);
    WeightedGraph smooth;
    smooth.add_vertex(genus, legs);

    std::set<CanonicalForm> all{canonical_form(smooth)};
    std::vector<CanonicalForm> level{canonical_form(smooth)};
    // contracting any edge of a stable graph leaves a stable graph, so every
    // stable graph with k + 1 edges degenerates from one with k edges
    while (!level.empty()) {
        std::set<CanonicalForm> next;
        for (const CanonicalForm& f : level)
            for (const WeightedGraph& d : one_edge_degenerations(graph_from_canonical(f))) {
                CanonicalForm key = canonical_form(d);
                if (!all.contains(key)) next.insert(std::move(key));
            }
        all.insert(next.begin(), next.end());
        level.assign(next.begin(), next.end());
    }
    std::vector<WeightedGraph> out;
    for (const CanonicalForm& f : all) out.push_back(graph_from_canonical(f));
    return out;
}

bool contraction_geq(const WeightedGraph& coarser, const WeightedGraph& finer) {
    if (genus(coarser) != genus(finer) || coarser.total_legs() != finer.total_legs())
        throw std::invalid_argument("contraction_geq: graphs have different (g, n)");
    if (coarser.edge_count() > finer.edge_count()) return false;
    detail::require_enumerable(finer, "contraction_geq");
    const CanonicalForm target = canonical_form(coarser);
    const auto drop = static_cast<int>(finer.edge_count() - coarser.edge_count());
    const detail::Mask all = detail::low_bits(finer.edge_count());
    for (detail::Mask s = 0; s <= all; ++s) {
        if (std::popcount(s) != drop) continue;
        std::vector<EdgeId> ids;
        detail::for_each_bit(s, [&](std::size_t p) { ids.push_back(finer.edges()[p].id); });
        if (canonical_form(contract_edges(finer, EdgeSubset(std::move(ids)))) == target) return true;
    }
    return false;
}

int stratum_dimension(const WeightedGraph& g) {
    if (!is_stable(g)) throw std::invalid_argument("stratum_dimension: graph is not stable");
    int dim = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) dim += 3 * g.vertex(v).weight - 3 + g.valence(v);
    return dim;
}

StableGraphPoset stable_graph_poset(int genus, int legs) {
    StableGraphPoset out;
    out.genus = genus;
    out.legs = legs;
    out.elements = enumerate_stable_graphs(genus, legs);
    std::unordered_map<CanonicalForm, std::size_t> index;
    for (std::size_t i = 0; i < out.size(); ++i) {
        index.emplace(canonical_form(out.elements[i]), i);
        out.dim.push_back(stratum_dimension(out.elements[i]));
    }
    out.order = Poset(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const WeightedGraph& finer = out.elements[i];
        const detail::Mask all = detail::low_bits(finer.edge_count());
        for (detail::Mask s = 1; s <= all && s != 0; ++s) {
            std::vector<EdgeId> ids;
            detail::for_each_bit(s, [&](std::size_t p) { ids.push_back(finer.edges()[p].id); });
            const auto it = index.find(canonical_form(contract_edges(finer, EdgeSubset(std::move(ids)))));
            if (it == index.end()) throw std::logic_error("contraction left the enumerated stable graphs");
            if (it->second != i) out.order.add_relation(i, it->second);
        }
    }
    return out;
}

}  // namespace cjac
