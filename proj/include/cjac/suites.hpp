#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cjac/graph.hpp"

namespace cjac::suites {

struct Options {
    std::size_t max_vertices = 5;
    std::size_t max_edges = 8;
    /// Vertex weights range over 0..max_weight where a suite asks for weights.
    int max_weight = 2;
    /// Random length assignments per graph in the tropical suite.
    int length_trials = 10;
    std::uint64_t seed = 20240601;
    /// 0 means: CJAC_WORKERS if set, else the hardware thread count.
    std::size_t workers = 0;
};

/// Outcome of one identity suite. `witness` names the first failing case in
/// enumeration order, so reports do not depend on scheduling.
struct Outcome {
    std::string name;
    std::string description;
    bool passed = true;
    std::size_t cases = 0;
    std::string witness;
};

using Suite = std::function<Outcome(const Options&)>;

Outcome kirchhoff(const Options& opt);
Outcome rooted_classes_count(const Options& opt);
Outcome totally_cyclic_classes_count(const Options& opt);
Outcome degree_identities(const Options& opt);
Outcome class_well_definedness(const Options& opt);
Outcome graded_stratifications(const Options& opt);
Outcome tropical_complexes(const Options& opt);
Outcome moduli_posets(const Options& opt);
Outcome corrupted_poset_control(const Options& opt);
/// Bridges, contraction, deletion, spanning-subgraph poset, Laplacian and
/// canonical-form checks.
Outcome graph_invariants(const Options& opt);
/// The order on OP^1 and OP^0 against an independent description of it.
Outcome class_order_oracle(const Options& opt);

struct NamedSuite {
    std::string name;
    Suite run;
};

std::vector<NamedSuite> all_suites();

std::size_t worker_count(const Options& opt);

/// Short human-readable description of a graph, used in witnesses.
std::string describe(const WeightedGraph& g);

/// Isomorphism by trying every vertex bijection. Independent of canonical_form.
bool isomorphic_by_search(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace cjac::suites
