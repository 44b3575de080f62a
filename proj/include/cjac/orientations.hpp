#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "cjac/graph.hpp"
#include "cjac/poset.hpp"

namespace cjac {

/// Bit p stands for the edge at position p of an ambient graph's edge list.
using EdgeMask = std::uint64_t;

/// Directions on the edges of a spanning subgraph (the `support`) of an
/// ambient graph. A non-loop edge normally runs from its `u` end to its `v`
/// end; bits in `reversed` flip it. Loops have one fixed direction.
struct Orientation {
    EdgeMask support = 0;
    EdgeMask reversed = 0;

    bool covers(std::size_t position) const { return (support >> position) & 1u; }
    VertexIndex source(const WeightedGraph& g, std::size_t position) const;
    VertexIndex target(const WeightedGraph& g, std::size_t position) const;

    /// The same directions on a smaller support.
    Orientation restricted_to(EdgeMask support_subset) const;

    /// Orientation of the whole graph from explicit edge sources; edges not
    /// listed run u -> v.
    static Orientation from_sources(const WeightedGraph& g, const std::map<EdgeId, VertexIndex>& source);
    static Orientation reference(const WeightedGraph& g);

    auto operator<=>(const Orientation&) const = default;
};

/// One bioriented edge plus an orientation of the remaining edges of the
/// support. `bioriented` is empty only for the edgeless one-vertex graph,
/// whose empty orientation counts as rooted.
struct OneOrientation {
    std::optional<std::size_t> bioriented;
    Orientation rest;

    EdgeMask support() const { return rest.support | (bioriented ? EdgeMask{1} << *bioriented : 0); }
    auto operator<=>(const OneOrientation&) const = default;
};

struct Multidegree {
    std::vector<int> values;  // indexed by vertex position

    int total() const;
    auto operator<=>(const Multidegree&) const = default;
};

enum class ClassKind { totally_cyclic, rooted_one };

std::string_view to_string(ClassKind kind);

/// Equivalence class of (1-)orientations on G - S, named by its multidegree.
struct OrientationClass {
    EdgeSubset removed;
    ClassKind kind = ClassKind::totally_cyclic;
    Multidegree degree;
    /// Some member of the class.
    OneOrientation witness;

    auto operator<=>(const OrientationClass& o) const {
        if (auto c = removed <=> o.removed; c != 0) return c;
        if (auto c = kind <=> o.kind; c != 0) return c;
        return degree <=> o.degree;
    }
    bool operator==(const OrientationClass& o) const { return (*this <=> o) == 0; }
};

/// Every orientation of g, each exactly once (2^(non-loop edges) of them).
std::vector<Orientation> enumerate_orientations(const WeightedGraph& g);
/// Every orientation of the spanning subgraph with the given edges.
std::vector<Orientation> enumerate_orientations(const WeightedGraph& g, EdgeMask support);
/// Every 1-orientation of the spanning subgraph with the given edges.
std::vector<OneOrientation> enumerate_one_orientations(const WeightedGraph& g, EdgeMask support);

/// h(v) - 1 + (number of edges with target v); a loop counts once.
Multidegree multidegree(const WeightedGraph& g, const Orientation& o);
/// Same, with the bioriented edge a target at both ends (a bioriented loop counts twice).
Multidegree multidegree_one(const WeightedGraph& g, const OneOrientation& o);

/// Every connected component of the oriented subgraph is strongly connected.
bool is_totally_cyclic(const WeightedGraph& g, const Orientation& o);
/// Every vertex is reachable from an end of the bioriented edge.
bool is_rooted(const WeightedGraph& g, const OneOrientation& o);

/// Classes of totally cyclic orientations of G - S, in increasing multidegree order.
std::vector<OrientationClass> totally_cyclic_classes(const WeightedGraph& g, const EdgeSubset& removed = {});
/// Classes of rooted 1-orientations of G - S; empty when G - S is disconnected.
std::vector<OrientationClass> rooted_one_orientation_classes(const WeightedGraph& g,
                                                             const EdgeSubset& removed = {});

/// The poset of classes over all admissible S, ranked by genus(G - S). The
/// order is induced by restriction of representatives.
RankedPoset<OrientationClass> orientation_class_poset(const WeightedGraph& g, ClassKind kind);

EdgeMask edge_mask(const WeightedGraph& g, const EdgeSubset& s);
EdgeSubset edge_subset(const WeightedGraph& g, EdgeMask mask);

}  // namespace cjac
