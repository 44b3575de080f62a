#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cjac/graph.hpp"
#include "cjac/orientations.hpp"

namespace cjac {

using BigInt = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> values);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix transpose() const;
    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Exact determinant (fraction-free elimination).
BigInt determinant(const IntegerMatrix& m);

/// |V| x |E|: the column of an edge from u to v is +1 at u and -1 at v; loops give zero columns.
IntegerMatrix boundary_matrix(const WeightedGraph& g, const Orientation& ref);
/// |E| x |V|, the transpose of the boundary.
IntegerMatrix coboundary_matrix(const WeightedGraph& g, const Orientation& ref);
/// boundary * coboundary for the reference orientation.
IntegerMatrix laplacian(const WeightedGraph& g);
/// Laplacian with the row and column of one vertex removed.
IntegerMatrix reduced_laplacian(const WeightedGraph& g, VertexIndex removed = 0);

struct SmithNormalForm {
    std::vector<BigInt> diagonal;  // nonnegative, each dividing the next, zeros last
    IntegerMatrix left;            // unimodular, rows x rows
    IntegerMatrix right;           // unimodular, cols x cols
};

/// left * m * right is diagonal with the returned entries.
SmithNormalForm smith_normal_form(const IntegerMatrix& m);

/// Finite abelian group given by invariant factors d1 | d2 | ... (all >= 2).
struct ComponentGroup {
    std::vector<BigInt> invariant_factors;
    std::size_t free_rank = 0;

    BigInt order() const;
};

/// Torsion of the cokernel of the reduced Laplacian. Requires a connected graph.
ComponentGroup component_group(const WeightedGraph& g, VertexIndex removed_vertex = 0);

/// Matrix-tree count via the reduced Laplacian determinant.
BigInt spanning_tree_count(const WeightedGraph& g);
/// Deletion-contraction count, independent of any matrix arithmetic.
BigInt spanning_tree_count_oracle(const WeightedGraph& g);

}  // namespace cjac
