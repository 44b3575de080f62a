#include "cjac/strata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cjac {

bool GradedReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

GradedReport verify_graded(const Poset& order, std::span<const int> dims) {
    const std::size_t n = order.size();
    if (dims.size() != n) throw std::invalid_argument("verify_graded: one dimension per element is required");
    GradedReport report;

    AxiomCheck reflexive{"reflexive"};
    for (std::size_t a = 0; a < n && reflexive.passed; ++a)
        if (!order.leq(a, a)) reflexive = {"reflexive", false, {a}, "element not related to itself"};
    report.checks.push_back(reflexive);

    AxiomCheck antisymmetric{"antisymmetric"};
    for (std::size_t a = 0; a < n && antisymmetric.passed; ++a) {
        const auto& up = order.up_set(a);
        for (auto b = up.find_next(a); b != boost::dynamic_bitset<>::npos; b = up.find_next(b))
            if (order.leq(b, a)) {
                antisymmetric = {"antisymmetric", false, {a, b}, "distinct elements below each other"};
                break;
            }
    }
    report.checks.push_back(antisymmetric);

    // a <= b implies up(b) is inside up(a)
    AxiomCheck transitive{"transitive"};
    for (std::size_t a = 0; a < n && transitive.passed; ++a) {
        const auto& up = order.up_set(a);
        for (auto b = up.find_first(); b != boost::dynamic_bitset<>::npos; b = up.find_next(b)) {
            if (b == a || order.up_set(b).is_subset_of(up)) continue;
            const auto missing = order.up_set(b) - up;
            transitive = {"transitive", false, {a, b, missing.find_first()}, "a <= b <= c but not a <= c"};
            break;
        }
    }
    report.checks.push_back(transitive);

    AxiomCheck monotone{"dim strictly monotone"};
    for (std::size_t a = 0; a < n && monotone.passed; ++a) {
        const auto& up = order.up_set(a);
        for (auto b = up.find_first(); b != boost::dynamic_bitset<>::npos; b = up.find_next(b))
            if (b != a && dims[a] >= dims[b]) {
                monotone = {"dim strictly monotone", false, {a, b},
                            "dim " + std::to_string(dims[a]) + " below dim " + std::to_string(dims[b])};
                break;
            }
    }
    report.checks.push_back(monotone);

    AxiomCheck covers{"covers step dim by one"};
    for (const auto& [a, b] : order.covers())
        if (dims[b] - dims[a] != 1) {
            covers = {"covers step dim by one", false, {a, b},
                      "cover from dim " + std::to_string(dims[a]) + " to dim " + std::to_string(dims[b])};
            break;
        }
    report.checks.push_back(covers);

    AxiomCheck top{"maximal elements share the top dim"};
    const int top_dim = n == 0 ? 0 : *std::max_element(dims.begin(), dims.end());
    for (std::size_t a : order.maximal_elements())
        if (dims[a] != top_dim) {
            top = {"maximal elements share the top dim", false, {a},
                   "maximal element of dim " + std::to_string(dims[a]) + " below top " + std::to_string(top_dim)};
            break;
        }
    report.checks.push_back(top);
    return report;
}

GradedStratification<EdgeSubset> neron_stratification(const WeightedGraph& g) {
    RankedPoset<EdgeSubset> c = connected_spanning_subgraph_poset(g);
    GradedStratification<EdgeSubset> out;
    out.order = std::move(c.order);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const WeightedGraph rest = delete_edges(g, c.elements[i]);
        out.strata.push_back({c.elements[i], c.rank[i], component_group(rest).order()});
    }
    return out;
}

namespace {

GradedStratification<OrientationClass> from_class_poset(RankedPoset<OrientationClass> p) {
    GradedStratification<OrientationClass> out;
    out.order = std::move(p.order);
    for (std::size_t i = 0; i < p.size(); ++i) out.strata.push_back({std::move(p.elements[i]), p.rank[i], 1});
    return out;
}

}  // namespace

GradedStratification<OrientationClass> pic_gminus1_stratification(const WeightedGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("pic_gminus1_stratification: graph is disconnected");
    return from_class_poset(orientation_class_poset(g, ClassKind::totally_cyclic));
}

GradedStratification<OrientationClass> pic_g_stratification(const WeightedGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("pic_g_stratification: graph is disconnected");
    return from_class_poset(orientation_class_poset(g, ClassKind::rooted_one));
}

NeronProjection project_to_neron(const GradedStratification<OrientationClass>& picg,
                                 const GradedStratification<EdgeSubset>& neron) {
    std::map<EdgeSubset, std::size_t> neron_index;
    for (std::size_t i = 0; i < neron.size(); ++i) neron_index.emplace(neron.strata[i].label, i);

    NeronProjection out;
    out.fiber_size.assign(neron.size(), 0);
    for (const auto& s : picg.strata) {
        auto it = neron_index.find(s.label.removed);
        if (it == neron_index.end()) throw std::logic_error("degree-g stratum over a disconnected spanning subgraph");
        out.image.push_back(it->second);
        ++out.fiber_size[it->second];
    }
    out.surjective = std::all_of(out.fiber_size.begin(), out.fiber_size.end(), [](std::size_t k) { return k > 0; });
    out.fibers_match_pieces = true;
    for (std::size_t i = 0; i < neron.size(); ++i)
        if (BigInt(out.fiber_size[i]) != neron.strata[i].pieces) out.fibers_match_pieces = false;
    out.order_preserving = true;
    for (std::size_t a = 0; a < picg.size() && out.order_preserving; ++a) {
        const auto& up = picg.order.up_set(a);
        for (auto b = up.find_first(); b != boost::dynamic_bitset<>::npos; b = up.find_next(b))
            if (!neron.order.leq(out.image[a], out.image[b])) {
                out.order_preserving = false;
                break;
            }
    }
    return out;
}

}  // namespace cjac
