#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cjac {

/// Finite binary relation intended to be a partial order. Element i <= j is
/// stored in the up-set of i. Nothing is assumed: the relation holds exactly
/// what was added, so order axioms can be checked afterwards.
class Poset {
public:
    Poset() = default;
    /// n elements, each related to itself.
    explicit Poset(std::size_t n);

    std::size_t size() const { return up_.size(); }

    void add_relation(std::size_t lower, std::size_t upper);
    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

    const boost::dynamic_bitset<>& up_set(std::size_t a) const { return up_[a]; }

    /// Pairs (a, b) with a < b and nothing strictly between. Assumes the
    /// relation is transitive; on a non-transitive relation the result is the
    /// covers of the relation as given.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    std::vector<std::size_t> maximal_elements() const;
    std::vector<std::size_t> minimal_elements() const;

    /// The same elements with every relation reversed.
    Poset dual() const;

private:
    std::vector<boost::dynamic_bitset<>> up_;
};

/// Elements with labels, an order, and an integer rank per element.
template <class Label>
struct RankedPoset {
    std::vector<Label> elements;
    Poset order;
    std::vector<int> rank;

    std::size_t size() const { return elements.size(); }
};

}  // namespace cjac
