#include "cjac/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bits.hpp"

namespace cjac {

// ---------------------------------------------------------------- EdgeSubset

EdgeSubset::EdgeSubset(std::initializer_list<EdgeId> ids) : EdgeSubset(std::vector<EdgeId>(ids)) {}

EdgeSubset::EdgeSubset(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

void EdgeSubset::insert(EdgeId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

bool EdgeSubset::contains(EdgeId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

bool EdgeSubset::is_subset_of(const EdgeSubset& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

// ------------------------------------------------------------- WeightedGraph

VertexIndex WeightedGraph::add_vertex(std::string name, int weight, int legs) {
    if (weight < 0 || legs < 0) throw std::invalid_argument("vertex weight and legs must be nonnegative");
    vertices_.push_back(Vertex{std::move(name), weight, legs});
    return vertices_.size() - 1;
}

VertexIndex WeightedGraph::add_vertex(int weight, int legs) {
    return add_vertex("v" + std::to_string(vertices_.size()), weight, legs);
}

EdgeId WeightedGraph::add_edge(VertexIndex u, VertexIndex v, std::string name) {
    return add_edge_with_id(EdgeId{next_id_}, u, v, std::move(name));
}

EdgeId WeightedGraph::add_edge_with_id(EdgeId id, VertexIndex u, VertexIndex v, std::string name) {
    if (u >= vertices_.size() || v >= vertices_.size())
        throw std::invalid_argument("edge endpoint is not a vertex of the graph");
    if (id.value < next_id_) throw std::invalid_argument("edge ids must be added in increasing order");
    if (name.empty()) name = "e" + std::to_string(id.value);
    edges_.push_back(Edge{id, std::move(name), u, v});
    next_id_ = id.value + 1;
    return id;
}

std::size_t WeightedGraph::position(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) return npos;
    return static_cast<std::size_t>(it - edges_.begin());
}

const Edge& WeightedGraph::edge(EdgeId id) const {
    const std::size_t p = position(id);
    if (p == npos) throw std::out_of_range("unknown edge id " + std::to_string(id.value));
    return edges_[p];
}

void WeightedGraph::set_weight(VertexIndex v, int weight) {
    if (weight < 0) throw std::invalid_argument("vertex weight must be nonnegative");
    vertices_.at(v).weight = weight;
}

void WeightedGraph::set_legs(VertexIndex v, int legs) {
    if (legs < 0) throw std::invalid_argument("leg count must be nonnegative");
    vertices_.at(v).legs = legs;
}

int WeightedGraph::valence(VertexIndex v) const {
    int val = vertices_.at(v).legs;
    for (const Edge& e : edges_) {
        if (e.u == v) ++val;
        if (e.v == v) ++val;
    }
    return val;
}

int WeightedGraph::total_weight() const {
    int h = 0;
    for (const Vertex& v : vertices_) h += v.weight;
    return h;
}

int WeightedGraph::total_legs() const {
    int n = 0;
    for (const Vertex& v : vertices_) n += v.legs;
    return n;
}

EdgeSubset WeightedGraph::all_edges() const {
    std::vector<EdgeId> ids;
    for (const Edge& e : edges_) ids.push_back(e.id);
    return EdgeSubset(std::move(ids));
}

// ---------------------------------------------------------------- invariants

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

void require_edges_known(const WeightedGraph& g, const EdgeSubset& s) {
    for (EdgeId id : s)
        if (!g.has_edge(id)) throw std::invalid_argument("unknown edge id " + std::to_string(id.value));
}

}  // namespace

int component_count(const WeightedGraph& g) {
    UnionFind uf(g.vertex_count());
    int count = static_cast<int>(g.vertex_count());
    for (const Edge& e : g.edges())
        if (uf.unite(e.u, e.v)) --count;
    return count;
}

bool is_connected(const WeightedGraph& g) { return component_count(g) == 1; }

int first_betti(const WeightedGraph& g) {
    return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + component_count(g);
}

int genus(const WeightedGraph& g) { return first_betti(g) + g.total_weight(); }

bool is_stable(const WeightedGraph& g) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (2 * g.vertex(v).weight - 2 + g.valence(v) <= 0) return false;
    return true;
}

EdgeSubset bridges(const WeightedGraph& g) {
    // Lowlink DFS; the parent edge is skipped by id so parallel edges count as cycles.
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::pair<VertexIndex, std::size_t>>> adj(n);
    for (std::size_t p = 0; p < g.edge_count(); ++p) {
        const Edge& e = g.edges()[p];
        if (e.is_loop()) continue;
        adj[e.u].emplace_back(e.v, p);
        adj[e.v].emplace_back(e.u, p);
    }
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> found;
    int timer = 0;

    struct Frame {
        VertexIndex v;
        std::size_t parent_edge;
        std::size_t next = 0;
    };
    for (VertexIndex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, WeightedGraph::npos}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, p] = adj[f.v][f.next++];
                if (p == f.parent_edge) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, p});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > disc[parent.v]) found.push_back(g.edges()[done.parent_edge].id);
                }
            }
        }
    }
    return EdgeSubset(std::move(found));
}

WeightedGraph delete_edges(const WeightedGraph& g, const EdgeSubset& s) {
    require_edges_known(g, s);
    WeightedGraph out;
    for (const Vertex& v : g.vertices()) out.add_vertex(v.name, v.weight, v.legs);
    for (const Edge& e : g.edges())
        if (!s.contains(e.id)) out.add_edge_with_id(e.id, e.u, e.v, e.name);
    return out;
}

WeightedGraph contract_edges(const WeightedGraph& g, const EdgeSubset& s) {
    require_edges_known(g, s);
    const std::size_t n = g.vertex_count();
    UnionFind uf(n);
    for (const Edge& e : g.edges())
        if (s.contains(e.id)) uf.unite(e.u, e.v);

    // Each class of (V, S) becomes one vertex of weight sum(h) + b1 of the
    // contracted edges inside it, which is what iterated single contractions give.
    std::vector<std::size_t> new_index(n, WeightedGraph::npos);
    std::vector<std::size_t> root_of_new;
    for (VertexIndex v = 0; v < n; ++v) {
        const std::size_t r = uf.find(v);
        if (new_index[r] == WeightedGraph::npos) {
            new_index[r] = root_of_new.size();
            root_of_new.push_back(r);
        }
    }
    const std::size_t k = root_of_new.size();
    std::vector<int> weight(k, 0), legs(k, 0), size(k, 0), inner(k, 0);
    std::vector<std::string> name(k);
    for (VertexIndex v = 0; v < n; ++v) {
        const std::size_t c = new_index[uf.find(v)];
        weight[c] += g.vertex(v).weight;
        legs[c] += g.vertex(v).legs;
        ++size[c];
        name[c] += (name[c].empty() ? "" : "+") + g.vertex(v).name;
    }
    for (const Edge& e : g.edges())
        if (s.contains(e.id)) ++inner[new_index[uf.find(e.u)]];

    WeightedGraph out;
    for (std::size_t c = 0; c < k; ++c) out.add_vertex(name[c], weight[c] + inner[c] - size[c] + 1, legs[c]);
    for (const Edge& e : g.edges())
        if (!s.contains(e.id))
            out.add_edge_with_id(e.id, new_index[uf.find(e.u)], new_index[uf.find(e.v)], e.name);
    return out;
}

RankedPoset<EdgeSubset> connected_spanning_subgraph_poset(const WeightedGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("connected_spanning_subgraph_poset: graph is disconnected");
    const detail::MaskGraph mg(g);
    if (mg.m > 30) throw std::length_error("connected_spanning_subgraph_poset: too many edges");

    std::vector<detail::Mask> masks;
    for (detail::Mask s = 0; s <= mg.all_edges(); ++s)
        if (mg.connected(mg.all_edges() & ~s)) masks.push_back(s);
    std::stable_sort(masks.begin(), masks.end(), [](detail::Mask a, detail::Mask b) {
        return std::popcount(a) < std::popcount(b);
    });

    RankedPoset<EdgeSubset> out;
    out.order = Poset(masks.size());
    for (detail::Mask s : masks) {
        std::vector<EdgeId> ids;
        detail::for_each_bit(s, [&](std::size_t p) { ids.push_back(g.edges()[p].id); });
        out.elements.emplace_back(std::move(ids));
        out.rank.push_back(mg.genus(mg.all_edges() & ~s));
    }
    for (std::size_t a = 0; a < masks.size(); ++a)
        for (std::size_t b = 0; b < masks.size(); ++b)
            if (a != b && (masks[a] & masks[b]) == masks[b]) out.order.add_relation(a, b);
    return out;
}

// ------------------------------------------------------------ canonical form

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    Matrix m(n, std::vector<int>(n, 0));
    for (const Edge& e : g.edges()) {
        ++m[e.u][e.v];
        if (!e.is_loop()) ++m[e.v][e.u];
    }
    return m;
}

template <class Key>
std::vector<int> rank_keys(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out;
    for (const Key& k : keys)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
    return out;
}

/// Color refinement starting from (weight, legs, loops, valence).
std::vector<int> refined_colors(const WeightedGraph& g, const Matrix& mult) {
    const std::size_t n = g.vertex_count();
    std::vector<std::tuple<int, int, int, int>> init;
    for (VertexIndex v = 0; v < n; ++v)
        init.emplace_back(g.vertex(v).weight, g.vertex(v).legs, mult[v][v], g.valence(v));
    std::vector<int> color = rank_keys(init);
    int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    while (true) {
        std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
        for (VertexIndex v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (VertexIndex w = 0; w < n; ++w)
                if (w != v && mult[v][w] > 0) sig[v].second.emplace_back(color[w], mult[v][w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<int> next = rank_keys(sig);
        const int next_classes = next.empty() ? 0 : *std::max_element(next.begin(), next.end()) + 1;
        color = std::move(next);
        if (next_classes == classes) break;
        classes = next_classes;
    }
    return color;
}

}  // namespace

CanonicalForm canonical_form(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    const Matrix mult = multiplicities(g);
    const std::vector<int> color = refined_colors(g, mult);

    // Cells in color order; only orderings inside cells are searched.
    const int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<VertexIndex>> cells(static_cast<std::size_t>(classes));
    for (VertexIndex v = 0; v < n; ++v) cells[static_cast<std::size_t>(color[v])].push_back(v);

    std::vector<int> header{static_cast<int>(n)};
    for (const auto& cell : cells)
        for (VertexIndex v : cell) {
            header.push_back(g.vertex(v).weight);
            header.push_back(g.vertex(v).legs);
        }

    std::vector<int> best;
    std::vector<int> candidate;
    std::vector<VertexIndex> order;
    auto evaluate = [&] {
        order.clear();
        for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
        candidate.clear();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) candidate.push_back(mult[order[i]][order[j]]);
        if (best.empty() || candidate < best) best = candidate;
    };
    // odometer over the permutations of every cell
    auto recurse = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            evaluate();
            return;
        }
        std::sort(cells[c].begin(), cells[c].end());
        do {
            self(self, c + 1);
        } while (std::next_permutation(cells[c].begin(), cells[c].end()));
    };
    recurse(recurse, 0);

    CanonicalForm out;
    out.code = std::move(header);
    out.code.insert(out.code.end(), best.begin(), best.end());
    return out;
}

bool is_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

WeightedGraph graph_from_canonical(const CanonicalForm& form) {
    const auto& c = form.code;
    if (c.empty()) throw std::invalid_argument("empty canonical form");
    const std::size_t n = static_cast<std::size_t>(c[0]);
    if (c.size() != 1 + 2 * n + n * (n + 1) / 2) throw std::invalid_argument("malformed canonical form");
    WeightedGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(c[1 + 2 * v], c[2 + 2 * v]);
    std::size_t k = 1 + 2 * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++k)
            for (int r = 0; r < c[k]; ++r) g.add_edge(i, j);
    return g;
}

}  // namespace cjac

std::size_t std::hash<cjac::CanonicalForm>::operator()(const cjac::CanonicalForm& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : f.code) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
}
