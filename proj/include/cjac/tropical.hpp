#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "cjac/graph.hpp"
#include "cjac/orientations.hpp"
#include "cjac/poset.hpp"
#include "cjac/strata.hpp"

namespace cjac {

inline constexpr double kInfiniteLength = std::numeric_limits<double>::infinity();

/// A graph with a positive (possibly infinite) length on every edge.
class MetricGraph {
public:
    /// Unit length on every edge.
    explicit MetricGraph(WeightedGraph g);
    /// lengths[p] belongs to the edge at position p.
    MetricGraph(WeightedGraph g, std::vector<double> lengths);

    const WeightedGraph& graph() const { return graph_; }
    double length(std::size_t position) const { return lengths_.at(position); }
    const std::vector<double>& lengths() const { return lengths_; }
    /// No infinite lengths.
    bool is_compact() const;

private:
    WeightedGraph graph_;
    std::vector<double> lengths_;
};

/// Dimension of the real torus Pic^d of a compact metric graph.
int jacobian_dimension(const MetricGraph& gamma);

struct Cell {
    OrientationClass label;
    int dim = 0;
};

struct CellComplex {
    std::vector<Cell> cells;
    /// a <= b when cell a is a face of cell b.
    Poset face_order;

    std::size_t size() const { return cells.size(); }
    std::vector<int> dims() const;
};

/// The break-divisor decomposition of Pic^g: one cell per rooted 1-orientation
/// class on a connected G - S, of dimension b1(G) - b1(G - S), with the face
/// order opposite to the class order.
CellComplex pic_g_cell_complex(const MetricGraph& gamma);

std::vector<std::size_t> f_vector(const CellComplex& c);
long long euler_characteristic(const CellComplex& c);
GradedReport verify_graded(const CellComplex& c);

}  // namespace cjac
