#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cjac/graph.hpp"
#include "cjac/homology.hpp"
#include "cjac/orientations.hpp"
#include "cjac/poset.hpp"

namespace cjac {

template <class Label>
struct Stratum {
    Label label;
    int dim = 0;
    /// Number of pieces the stratum stands for (copies of a Jacobian for Neron strata).
    BigInt pieces = 1;
};

/// A finite poset whose elements carry a dimension. Nothing about the axioms
/// is assumed; see verify_graded.
template <class Label>
struct GradedStratification {
    std::vector<Stratum<Label>> strata;
    Poset order;

    std::size_t size() const { return strata.size(); }
    std::vector<int> dims() const {
        std::vector<int> d;
        d.reserve(strata.size());
        for (const auto& s : strata) d.push_back(s.dim);
        return d;
    }
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    /// Offending elements, when the check failed.
    std::vector<std::size_t> witness;
    std::string detail;
};

struct GradedReport {
    std::vector<AxiomCheck> checks;
    bool passed() const;
};

/// Checks that `order` is a partial order, that dim is strictly monotone, that
/// every cover raises dim by exactly one, and that every maximal element has
/// the top dimension.
GradedReport verify_graded(const Poset& order, std::span<const int> dims);

template <class Label>
GradedReport verify_graded(const GradedStratification<Label>& s) {
    const auto d = s.dims();
    return verify_graded(s.order, d);
}

/// Strata indexed by connected spanning subgraphs, dim genus(G - S), pieces |Phi(G - S)|.
GradedStratification<EdgeSubset> neron_stratification(const WeightedGraph& g);
/// Strata indexed by totally cyclic classes over all S, dim genus(G - S).
GradedStratification<OrientationClass> pic_gminus1_stratification(const WeightedGraph& g);
/// Strata indexed by rooted 1-orientation classes over connected G - S, dim genus(G - S).
GradedStratification<OrientationClass> pic_g_stratification(const WeightedGraph& g);

/// The map from degree-g strata to Neron strata sending a class on G - S to S.
struct NeronProjection {
    /// For each degree-g stratum, the index of its Neron stratum.
    std::vector<std::size_t> image;
    /// Per Neron stratum: fiber size and the expected |Phi(G - S)|.
    std::vector<std::size_t> fiber_size;
    bool surjective = false;
    bool order_preserving = false;
    bool fibers_match_pieces = false;
};

NeronProjection project_to_neron(const GradedStratification<OrientationClass>& picg,
                                 const GradedStratification<EdgeSubset>& neron);

}  // namespace cjac
