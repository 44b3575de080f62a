#include "cjac/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cjac {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> values)
    : IntegerMatrix(rows, cols) {
    if (values.size() != rows * cols) throw std::invalid_argument("IntegerMatrix: wrong number of entries");
    std::size_t i = 0;
    for (long long v : values) data_[i++] = v;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ------------------------------------------------------------ chain complex

IntegerMatrix boundary_matrix(const WeightedGraph& g, const Orientation& ref) {
    IntegerMatrix d(g.vertex_count(), g.edge_count());
    for (std::size_t p = 0; p < g.edge_count(); ++p) {
        if (!ref.covers(p)) throw std::invalid_argument("boundary_matrix: orientation does not cover every edge");
        const Edge& e = g.edges()[p];
        if (e.is_loop()) continue;
        d(ref.source(g, p), p) += 1;
        d(ref.target(g, p), p) -= 1;
    }
    return d;
}

IntegerMatrix coboundary_matrix(const WeightedGraph& g, const Orientation& ref) {
    return boundary_matrix(g, ref).transpose();
}

IntegerMatrix laplacian(const WeightedGraph& g) {
    const Orientation ref = Orientation::reference(g);
    return boundary_matrix(g, ref) * coboundary_matrix(g, ref);
}

IntegerMatrix reduced_laplacian(const WeightedGraph& g, VertexIndex removed) {
    const std::size_t n = g.vertex_count();
    if (removed >= n) throw std::out_of_range("reduced_laplacian: no such vertex");
    const IntegerMatrix full = laplacian(g);
    IntegerMatrix out(n - 1, n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
        if (i == removed) continue;
        for (std::size_t j = 0, c = 0; j < n; ++j) {
            if (j == removed) continue;
            out(r, c++) = full(i, j);
        }
        ++r;
    }
    return out;
}

// ------------------------------------------------------- Smith normal form

namespace {

struct SnfState {
    IntegerMatrix a, left, right;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
    }
    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += q * a(j, c);
        for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) += q * left(j, c);
    }
    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += q * a(r, j);
        for (std::size_t r = 0; r < right.rows(); ++r) right(r, i) += q * right(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
    SnfState s{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (s.a(i, j) != 0 && (pr == rows || abs(s.a(i, j)) < abs(s.a(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        s.swap_rows(t, pr);
        s.swap_cols(t, pc);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (s.a(i, t) != 0) {
                    s.add_row(i, t, -(s.a(i, t) / s.a(t, t)));
                    if (s.a(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (s.a(t, j) != 0) {
                    s.add_col(j, t, -(s.a(t, j) / s.a(t, t)));
                    if (s.a(t, j) != 0) clean = false;
                }
            if (!clean) {
                // a remainder survived: bring the smallest one to the pivot and repeat
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (s.a(i, t) != 0 && abs(s.a(i, t)) < abs(s.a(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (s.a(t, j) != 0 && abs(s.a(t, j)) < abs(s.a(bi, bj))) bi = t, bj = j;
                s.swap_rows(t, bi);
                s.swap_cols(t, bj);
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (s.a(i, j) % s.a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            s.add_row(t, bad, 1);
        }
        if (s.a(t, t) < 0) s.negate_row(t);
    }

    SmithNormalForm out{{}, std::move(s.left), std::move(s.right)};
    for (std::size_t i = 0; i < steps; ++i) out.diagonal.push_back(s.a(i, i));
    return out;
}

// -------------------------------------------------------- component group

BigInt ComponentGroup::order() const {
    BigInt n = 1;
    for (const BigInt& d : invariant_factors) n *= d;
    return n;
}

ComponentGroup component_group(const WeightedGraph& g, VertexIndex removed_vertex) {
    if (!is_connected(g)) throw std::invalid_argument("component_group: graph is disconnected");
    const SmithNormalForm snf = smith_normal_form(reduced_laplacian(g, removed_vertex));
    ComponentGroup out;
    for (const BigInt& d : snf.diagonal) {
        if (d == 0)
            ++out.free_rank;
        else if (d > 1)
            out.invariant_factors.push_back(d);
    }
    return out;
}

BigInt spanning_tree_count(const WeightedGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("spanning_tree_count: graph is disconnected");
    return determinant(reduced_laplacian(g));
}

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

bool connected_edge_list(std::size_t n, const EdgeList& edges) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (auto [a, b] : edges) {
        const std::size_t ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps == 1;
}

// tau(G) = tau(G minus all copies of e) + k * tau(G / e), loops dropped.
BigInt deletion_contraction(std::size_t n, EdgeList edges) {
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    if (n == 1) return 1;
    if (edges.empty() || !connected_edge_list(n, edges)) return 0;

    const auto [a, b] = edges.front();
    auto same = [&](const auto& e) { return (e.first == a && e.second == b) || (e.first == b && e.second == a); };
    const auto copies = static_cast<long>(std::count_if(edges.begin(), edges.end(), same));

    EdgeList deleted;
    EdgeList contracted;
    auto relabel = [&](std::size_t x) {
        if (x == b) x = a;
        return x > b ? x - 1 : x;
    };
    for (const auto& e : edges) {
        if (same(e)) continue;
        deleted.push_back(e);
        contracted.emplace_back(relabel(e.first), relabel(e.second));
    }
    return deletion_contraction(n, std::move(deleted)) + copies * deletion_contraction(n - 1, std::move(contracted));
}

}  // namespace

BigInt spanning_tree_count_oracle(const WeightedGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("spanning_tree_count_oracle: graph is disconnected");
    EdgeList edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    return deletion_contraction(g.vertex_count(), std::move(edges));
}

}  // namespace cjac
