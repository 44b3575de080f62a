#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cjac/poset.hpp"

namespace cjac {

/// Stable identifier of an edge. Survives deletion and contraction of other edges.
struct EdgeId {
    std::uint32_t value = 0;
    auto operator<=>(const EdgeId&) const = default;
};

using VertexIndex = std::size_t;

struct Vertex {
    std::string name;
    int weight = 0;
    int legs = 0;

    bool operator==(const Vertex&) const = default;
};

struct Edge {
    EdgeId id;
    std::string name;
    VertexIndex u = 0;
    VertexIndex v = 0;

    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

/// Sorted set of edge ids of some ambient graph.
class EdgeSubset {
public:
    EdgeSubset() = default;
    EdgeSubset(std::initializer_list<EdgeId> ids);
    explicit EdgeSubset(std::vector<EdgeId> ids);

    void insert(EdgeId id);
    bool contains(EdgeId id) const;
    bool is_subset_of(const EdgeSubset& other) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<EdgeId>& ids() const { return ids_; }

    auto operator<=>(const EdgeSubset&) const = default;

private:
    std::vector<EdgeId> ids_;
};

/// Vertex-weighted multigraph with loops and per-vertex leg counts: the dual
/// graph of a nodal curve. Vertices are addressed by position; edges carry a
/// stable EdgeId and are kept sorted by it.
class WeightedGraph {
public:
    WeightedGraph() = default;

    VertexIndex add_vertex(std::string name, int weight = 0, int legs = 0);
    VertexIndex add_vertex(int weight = 0, int legs = 0);
    EdgeId add_edge(VertexIndex u, VertexIndex v, std::string name = {});
    /// Appends an edge with a caller-chosen id, which must exceed every id in use.
    EdgeId add_edge_with_id(EdgeId id, VertexIndex u, VertexIndex v, std::string name = {});

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Vertex> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }
    const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }

    /// Position of the edge in edges(), or npos when the id is not present.
    std::size_t position(EdgeId id) const;
    const Edge& edge(EdgeId id) const;
    bool has_edge(EdgeId id) const { return position(id) != npos; }

    void set_weight(VertexIndex v, int weight);
    void set_legs(VertexIndex v, int legs);

    /// Edge-endpoints at v (a loop counts twice) plus legs.
    int valence(VertexIndex v) const;
    int total_weight() const;
    int total_legs() const;

    EdgeSubset all_edges() const;

    bool operator==(const WeightedGraph&) const = default;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::uint32_t next_id_ = 0;
};

int component_count(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);
/// |E| - |V| + #components; legs and weights ignored.
int first_betti(const WeightedGraph& g);
int genus(const WeightedGraph& g);
/// 2h(v) - 2 + valence(v) > 0 at every vertex.
bool is_stable(const WeightedGraph& g);
/// Non-loop edges whose removal disconnects their component.
EdgeSubset bridges(const WeightedGraph& g);

WeightedGraph delete_edges(const WeightedGraph& g, const EdgeSubset& s);
WeightedGraph contract_edges(const WeightedGraph& g, const EdgeSubset& s);

/// All S with G - S connected, ordered by reverse inclusion and ranked by genus(G - S).
RankedPoset<EdgeSubset> connected_spanning_subgraph_poset(const WeightedGraph& g);

/// Isomorphism invariant key: equal exactly when the graphs are isomorphic
/// as weighted legged multigraphs. Names and edge ids are ignored.
struct CanonicalForm {
    std::vector<int> code;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const WeightedGraph& g);
bool is_isomorphic(const WeightedGraph& a, const WeightedGraph& b);
/// Rebuilds a graph from its canonical key (vertices in canonical order).
WeightedGraph graph_from_canonical(const CanonicalForm& form);

}  // namespace cjac

template <>
struct std::hash<cjac::CanonicalForm> {
    std::size_t operator()(const cjac::CanonicalForm& f) const noexcept;
};
