#include "cjac/orientations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bits.hpp"

namespace cjac {

using detail::bit;
using detail::for_each_bit;
using detail::Mask;

// ----------------------------------------------------------------- basics

VertexIndex Orientation::source(const WeightedGraph& g, std::size_t position) const {
    const Edge& e = g.edges()[position];
    return (reversed >> position) & 1u ? e.v : e.u;
}

VertexIndex Orientation::target(const WeightedGraph& g, std::size_t position) const {
    const Edge& e = g.edges()[position];
    return (reversed >> position) & 1u ? e.u : e.v;
}

Orientation Orientation::restricted_to(EdgeMask support_subset) const {
    return Orientation{support & support_subset, reversed & support_subset};
}

Orientation Orientation::from_sources(const WeightedGraph& g, const std::map<EdgeId, VertexIndex>& source) {
    detail::require_enumerable(g, "Orientation");
    Orientation o{detail::low_bits(g.edge_count()), 0};
    for (const auto& [id, src] : source) {
        const std::size_t p = g.position(id);
        if (p == WeightedGraph::npos) throw std::invalid_argument("orientation names an unknown edge");
        const Edge& e = g.edges()[p];
        if (src != e.u && src != e.v) throw std::invalid_argument("orientation source is not an endpoint");
        if (!e.is_loop() && src == e.v) o.reversed |= bit(p);
    }
    return o;
}

Orientation Orientation::reference(const WeightedGraph& g) { return from_sources(g, {}); }

int Multidegree::total() const { return std::accumulate(values.begin(), values.end(), 0); }

std::string_view to_string(ClassKind kind) {
    return kind == ClassKind::totally_cyclic ? "totally_cyclic" : "rooted_one";
}

EdgeMask edge_mask(const WeightedGraph& g, const EdgeSubset& s) {
    detail::require_enumerable(g, "edge_mask");
    EdgeMask m = 0;
    for (EdgeId id : s) {
        const std::size_t p = g.position(id);
        if (p == WeightedGraph::npos) throw std::invalid_argument("unknown edge id " + std::to_string(id.value));
        m |= bit(p);
    }
    return m;
}

EdgeSubset edge_subset(const WeightedGraph& g, EdgeMask mask) {
    std::vector<EdgeId> ids;
    for_each_bit(mask, [&](std::size_t p) { ids.push_back(g.edges()[p].id); });
    return EdgeSubset(std::move(ids));
}

// ------------------------------------------------------------- mask engine

namespace {

class Engine {
public:
    explicit Engine(const WeightedGraph& g) : mg_(g), out_(mg_.n), in_(mg_.n) {}

    const detail::MaskGraph& shape() const { return mg_; }

    void load(EdgeMask support, EdgeMask reversed) {
        std::fill(out_.begin(), out_.end(), 0);
        std::fill(in_.begin(), in_.end(), 0);
        for_each_bit(support & ~mg_.loops, [&](std::size_t p) {
            const bool rev = (reversed >> p) & 1u;
            const std::size_t s = rev ? mg_.head[p] : mg_.tail[p];
            const std::size_t t = rev ? mg_.tail[p] : mg_.head[p];
            out_[s] |= bit(t);
            in_[t] |= bit(s);
        });
    }

    Mask forward(Mask start) const { return closure(start, out_); }
    Mask backward(Mask start) const { return closure(start, in_); }

    bool totally_cyclic(EdgeMask support, EdgeMask reversed) {
        load(support, reversed);
        for (Mask comp : mg_.components(support)) {
            const Mask root = comp & (~comp + 1);
            if (forward(root) != comp || backward(root) != comp) return false;
        }
        return true;
    }

    bool rooted(std::optional<std::size_t> bioriented, EdgeMask rest_support, EdgeMask reversed) const {
        if (!bioriented) return mg_.n == 1 && rest_support == 0;
        std::array<Mask, 64> out;
        std::fill_n(out.begin(), mg_.n, Mask{0});
        for_each_bit(rest_support & ~mg_.loops, [&](std::size_t p) {
            if ((reversed >> p) & 1u)
                out[mg_.head[p]] |= bit(mg_.tail[p]);
            else
                out[mg_.tail[p]] |= bit(mg_.head[p]);
        });
        const Mask all = mg_.all_vertices();
        Mask seen = bit(mg_.tail[*bioriented]) | bit(mg_.head[*bioriented]);
        Mask frontier = seen;
        while (frontier && seen != all) {
            Mask next = 0;
            for_each_bit(frontier, [&](std::size_t v) { next |= out[v]; });
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == all;
    }

    /// t-vector: number of edge ends that are targets at each vertex.
    void targets(EdgeMask support, EdgeMask reversed, std::vector<int>& t) const {
        t.assign(mg_.n, 0);
        for_each_bit(support, [&](std::size_t p) {
            const bool rev = (reversed >> p) & 1u;
            ++t[rev ? mg_.tail[p] : mg_.head[p]];
        });
    }

    Multidegree degree_from_targets(std::span<const int> t) const {
        Multidegree d;
        d.values.resize(mg_.n);
        for (std::size_t v = 0; v < mg_.n; ++v) d.values[v] = mg_.weight[v] - 1 + t[v];
        return d;
    }

    Mask non_loop(EdgeMask support) const { return support & ~mg_.loops; }

private:
    static Mask closure(Mask start, const std::vector<Mask>& step) {
        Mask seen = start;
        Mask frontier = start;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](std::size_t v) { next |= step[v]; });
            frontier = next & ~seen;
            seen |= next;
        }
        return seen;
    }

    detail::MaskGraph mg_;
    std::vector<Mask> out_;
    std::vector<Mask> in_;
};

/// Calls f(subset) for every subset of `free`, the empty set first.
template <class F>
void for_each_subset(Mask free, F&& f) {
    Mask r = 0;
    while (true) {
        f(r);
        if (r == free) break;
        r = (r - free) & free;
    }
}

}  // namespace

// ---------------------------------------------------------- enumerations

std::vector<Orientation> enumerate_orientations(const WeightedGraph& g) {
    detail::require_enumerable(g, "enumerate_orientations");
    return enumerate_orientations(g, detail::low_bits(g.edge_count()));
}

std::vector<Orientation> enumerate_orientations(const WeightedGraph& g, EdgeMask support) {
    const detail::MaskGraph mg(g);
    std::vector<Orientation> out;
    for_each_subset(support & ~mg.loops, [&](Mask r) { out.push_back(Orientation{support, r}); });
    return out;
}

std::vector<OneOrientation> enumerate_one_orientations(const WeightedGraph& g, EdgeMask support) {
    const detail::MaskGraph mg(g);
    std::vector<OneOrientation> out;
    if (support == 0) {
        if (mg.n == 1) out.push_back(OneOrientation{});
        return out;
    }
    for_each_bit(support, [&](std::size_t b) {
        const Mask rest = support & ~bit(b);
        for_each_subset(rest & ~mg.loops, [&](Mask r) { out.push_back(OneOrientation{b, Orientation{rest, r}}); });
    });
    return out;
}

Multidegree multidegree(const WeightedGraph& g, const Orientation& o) {
    Multidegree d;
    for (const Vertex& v : g.vertices()) d.values.push_back(v.weight - 1);
    for_each_bit(o.support, [&](std::size_t p) { ++d.values[o.target(g, p)]; });
    return d;
}

Multidegree multidegree_one(const WeightedGraph& g, const OneOrientation& o) {
    if (!o.bioriented) {
        if (g.vertex_count() != 1 || o.rest.support != 0)
            throw std::invalid_argument("a 1-orientation without a bioriented edge needs the one-vertex edgeless graph");
        // the decreed empty 1-orientation has degree genus = h
        return Multidegree{{g.vertex(0).weight}};
    }
    Multidegree d = multidegree(g, o.rest);
    const Edge& e = g.edges()[*o.bioriented];
    ++d.values[e.u];
    ++d.values[e.v];
    return d;
}

bool is_totally_cyclic(const WeightedGraph& g, const Orientation& o) {
    Engine eng(g);
    return eng.totally_cyclic(o.support, o.reversed);
}

bool is_rooted(const WeightedGraph& g, const OneOrientation& o) {
    Engine eng(g);
    return eng.rooted(o.bioriented, o.rest.support, o.rest.reversed);
}

// ------------------------------------------------------------ class sets

namespace {

/// Map from t-vectors of one graph to indices. Vectors are packed into one
/// integer when they fit.
class DegreeIndex {
public:
    DegreeIndex() = default;
    DegreeIndex(std::size_t n, std::size_t max_entry) {
        long double range = 1;
        for (std::size_t i = 0; i < n; ++i) range *= static_cast<long double>(max_entry + 1);
        packable_ = range < 1.0e18L;
        base_ = max_entry + 1;
    }

    const std::size_t* find(const std::vector<int>& t) const {
        if (packable_) {
            if (keys_.empty()) return nullptr;
            for (std::size_t h = slot(pack(t));; h = (h + 1) & (keys_.size() - 1)) {
                if (keys_[h] == kEmpty) return nullptr;
                if (keys_[h] == pack(t)) return &values_[h];
            }
        }
        auto it = general_.find(t);
        return it == general_.end() ? nullptr : &it->second;
    }

    /// Inserts unless present; returns the stored value and whether it was new.
    std::pair<std::size_t, bool> insert(const std::vector<int>& t, std::size_t value) {
        if (packable_) {
            if (2 * (count_ + 1) > keys_.size()) grow();
            const std::uint64_t key = pack(t);
            std::size_t h = slot(key);
            for (; keys_[h] != kEmpty; h = (h + 1) & (keys_.size() - 1))
                if (keys_[h] == key) return {values_[h], false};
            keys_[h] = key;
            values_[h] = value;
            ++count_;
            return {value, true};
        }
        auto [it, fresh] = general_.try_emplace(t, value);
        return {it->second, fresh};
    }

    bool empty() const { return count_ == 0 && general_.empty(); }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    std::uint64_t pack(const std::vector<int>& t) const {
        std::uint64_t key = 0;
        for (int x : t) key = key * base_ + static_cast<std::uint64_t>(x);
        return key;
    }

    std::size_t slot(std::uint64_t key) const {
        return static_cast<std::size_t>((key * 0x9e3779b97f4a7c15ULL) >> 20) & (keys_.size() - 1);
    }

    void grow() {
        std::vector<std::uint64_t> old_keys(std::max<std::size_t>(16, 2 * keys_.size()), kEmpty);
        std::vector<std::size_t> old_values(old_keys.size());
        old_keys.swap(keys_);
        old_values.swap(values_);
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] == kEmpty) continue;
            std::size_t h = slot(old_keys[i]);
            while (keys_[h] != kEmpty) h = (h + 1) & (keys_.size() - 1);
            keys_[h] = old_keys[i];
            values_[h] = old_values[i];
        }
    }

    bool packable_ = true;
    std::uint64_t base_ = 1;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> keys_;
    std::vector<std::size_t> values_;
    std::map<std::vector<int>, std::size_t> general_;
};

/// Orientations of one spanning subgraph grouped by t-vector, recording
/// whether each group holds special (totally cyclic / rooted) members, other
/// members, or both.
class ClassTable {
public:
    explicit ClassTable(const detail::MaskGraph& mg) : index_(mg.n, mg.m + 2) {}

    void record(const std::vector<int>& t, bool special, const OneOrientation& o) {
        auto [slot, fresh] = index_.insert(t, entries_.size());
        if (fresh) {
            entries_.push_back(Entry{pool_.size()});
            pool_.insert(pool_.end(), t.begin(), t.end());
        }
        Entry& e = entries_[slot];
        if (special) {
            if (!e.special) e.witness = o;
            e.special = true;
        } else {
            e.ordinary = true;
        }
    }

    std::vector<OrientationClass> classes(const Engine& eng, const EdgeSubset& removed, ClassKind kind) const {
        std::vector<OrientationClass> out;
        for (const Entry& e : entries_) {
            if (e.special && e.ordinary)
                throw std::logic_error(std::string("a multidegree class mixes ") + std::string(to_string(kind)) +
                                       " and other orientations");
            if (e.special) {
                const std::span<const int> t(pool_.data() + e.offset, eng.shape().n);
                out.push_back(OrientationClass{removed, kind, eng.degree_from_targets(t), e.witness});
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const OrientationClass& a, const OrientationClass& b) { return a.degree < b.degree; });
        return out;
    }

private:
    struct Entry {
        std::size_t offset = 0;  // of the t-vector in pool_
        bool special = false;
        bool ordinary = false;
        OneOrientation witness;
    };
    DegreeIndex index_;
    std::vector<Entry> entries_;
    std::vector<int> pool_;
};

ClassTable tc_table(Engine& eng, EdgeMask kept) {
    ClassTable table(eng.shape());
    std::vector<int> t;
    for_each_subset(eng.non_loop(kept), [&](Mask r) {
        eng.targets(kept, r, t);
        const bool tc = eng.totally_cyclic(kept, r);
        table.record(t, tc, OneOrientation{std::nullopt, Orientation{kept, r}});
    });
    return table;
}

/// t-vector used for the decreed empty 1-orientation of a one-vertex graph:
/// one target, so that the multidegree is h.
const std::vector<int> kEmptyOneTargets{1};

ClassTable rooted_table(Engine& eng, EdgeMask kept) {
    ClassTable table(eng.shape());
    const auto& mg = eng.shape();
    if (kept == 0) {
        if (mg.n == 1) table.record(kEmptyOneTargets, true, OneOrientation{});
        return table;
    }
    std::vector<int> t;
    for_each_bit(kept, [&](std::size_t b) {
        const Mask rest = kept & ~bit(b);
        for_each_subset(eng.non_loop(rest), [&](Mask r) {
            eng.targets(rest, r, t);
            ++t[mg.tail[b]];
            ++t[mg.head[b]];
            const bool rooted = eng.rooted(b, rest, r);
            table.record(t, rooted, OneOrientation{b, Orientation{rest, r}});
        });
    });
    return table;
}

}  // namespace

std::vector<OrientationClass> totally_cyclic_classes(const WeightedGraph& g, const EdgeSubset& removed) {
    Engine eng(g);
    const Mask kept = eng.shape().all_edges() & ~edge_mask(g, removed);
    return tc_table(eng, kept).classes(eng, removed, ClassKind::totally_cyclic);
}

std::vector<OrientationClass> rooted_one_orientation_classes(const WeightedGraph& g, const EdgeSubset& removed) {
    Engine eng(g);
    const Mask kept = eng.shape().all_edges() & ~edge_mask(g, removed);
    if (!eng.shape().connected(kept)) return {};
    return rooted_table(eng, kept).classes(eng, removed, ClassKind::rooted_one);
}

// ------------------------------------------------------------ class posets

RankedPoset<OrientationClass> orientation_class_poset(const WeightedGraph& g, ClassKind kind) {
    const bool rooted = kind == ClassKind::rooted_one;
    if (rooted && !is_connected(g)) throw std::invalid_argument("orientation_class_poset: graph is disconnected");
    Engine eng(g);
    const auto& mg = eng.shape();
    if (mg.m > 20) throw std::length_error("orientation_class_poset: too many edges");
    const Mask all = mg.all_edges();

    // admissible removed sets, smallest first
    std::vector<Mask> removed_sets;
    for (Mask s = 0; s <= all; ++s)
        if (!rooted || mg.connected(all & ~s)) removed_sets.push_back(s);
    std::stable_sort(removed_sets.begin(), removed_sets.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

    RankedPoset<OrientationClass> out;
    std::vector<DegreeIndex> index_of(std::size_t{1} << mg.m, DegreeIndex(mg.n, mg.m + 2));
    std::vector<Mask> removed_of;
    std::vector<std::vector<int>> targets_of;
    for (Mask s : removed_sets) {
        const Mask kept = all & ~s;
        const EdgeSubset removed = edge_subset(g, s);
        const auto classes = rooted ? rooted_table(eng, kept).classes(eng, removed, kind)
                                    : tc_table(eng, kept).classes(eng, removed, kind);
        for (const auto& c : classes) {
            std::vector<int> t(mg.n);
            for (std::size_t v = 0; v < mg.n; ++v) t[v] = c.degree.values[v] - mg.weight[v] + 1;
            index_of[s].insert(t, out.elements.size());
            out.elements.push_back(c);
            out.rank.push_back(mg.genus(kept));
            removed_of.push_back(s);
            targets_of.push_back(std::move(t));
        }
    }
    out.order = Poset(out.elements.size());

    // c1 <= c2 when a member O2 of c2 restricts to a member O1 of c1. Every
    // such O2 is O1 plus an orientation P of the edges S1 - S2, so the degree
    // of c2 is the degree of c1 plus the in-degrees of P. Conversely O1 + P
    // lies in the class of its degree, and the tables above confirmed that
    // class status is constant on degrees, so O1 + P is a member of c2.
    std::vector<int> t;
    for (std::size_t lower = 0; lower < out.elements.size(); ++lower) {
        const Mask s1 = removed_of[lower];
        for_each_subset(s1, [&](Mask f) {
            if (f == 0) return;
            const DegreeIndex& above = index_of[s1 & ~f];
            if (above.empty()) return;
            t = targets_of[lower];
            auto orient = [&](auto&& self, Mask rest) -> void {
                if (rest == 0) {
                    if (const std::size_t* upper = above.find(t)) out.order.add_relation(lower, *upper);
                    return;
                }
                const std::size_t p = static_cast<std::size_t>(std::countr_zero(rest));
                const Mask next = rest & (rest - 1);
                ++t[mg.head[p]];
                self(self, next);
                --t[mg.head[p]];
                if (mg.tail[p] != mg.head[p]) {
                    ++t[mg.tail[p]];
                    self(self, next);
                    --t[mg.tail[p]];
                }
            };
            orient(orient, f);
        });
    }
    return out;
}

}  // namespace cjac
