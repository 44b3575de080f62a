#include "cjac/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cjac {

MetricGraph::MetricGraph(WeightedGraph g) : graph_(std::move(g)), lengths_(graph_.edge_count(), 1.0) {}

MetricGraph::MetricGraph(WeightedGraph g, std::vector<double> lengths)
    : graph_(std::move(g)), lengths_(std::move(lengths)) {
    if (lengths_.size() != graph_.edge_count()) throw std::invalid_argument("MetricGraph: one length per edge");
    for (double l : lengths_)
        if (std::isnan(l) || !(l > 0.0)) throw std::invalid_argument("MetricGraph: edge lengths must be positive");
}

bool MetricGraph::is_compact() const {
    return std::none_of(lengths_.begin(), lengths_.end(), [](double l) { return std::isinf(l); });
}

int jacobian_dimension(const MetricGraph& gamma) {
    if (!gamma.is_compact()) throw std::invalid_argument("jacobian_dimension: metric graph has infinite edges");
    return first_betti(gamma.graph());
}

std::vector<int> CellComplex::dims() const {
    std::vector<int> d;
    for (const Cell& c : cells) d.push_back(c.dim);
    return d;
}

CellComplex pic_g_cell_complex(const MetricGraph& gamma) {
    const WeightedGraph& g = gamma.graph();
    if (!gamma.is_compact()) throw std::invalid_argument("pic_g_cell_complex: metric graph has infinite edges");
    if (!is_connected(g)) throw std::invalid_argument("pic_g_cell_complex: graph is disconnected");

    RankedPoset<OrientationClass> classes = orientation_class_poset(g, ClassKind::rooted_one);
    const int b1 = first_betti(g);
    CellComplex out;
    out.face_order = classes.order.dual();
    for (auto& c : classes.elements) {
        const int dim = b1 - first_betti(delete_edges(g, c.removed));
        out.cells.push_back({std::move(c), dim});
    }
    return out;
}

std::vector<std::size_t> f_vector(const CellComplex& c) {
    std::vector<std::size_t> f;
    for (const Cell& cell : c.cells) {
        const auto d = static_cast<std::size_t>(cell.dim);
        if (f.size() <= d) f.resize(d + 1, 0);
        ++f[d];
    }
    return f;
}

long long euler_characteristic(const CellComplex& c) {
    long long chi = 0;
    const auto f = f_vector(c);
    for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
    return chi;
}

GradedReport verify_graded(const CellComplex& c) {
    const auto d = c.dims();
    return verify_graded(c.face_order, d);
}

}  // namespace cjac
