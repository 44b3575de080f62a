#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cjac/graph.hpp"

namespace cjac {

/// Malformed graph document. what() names the offending location.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph file: vertices, edges and, for metric graphs, per-edge lengths.
struct GraphDocument {
    WeightedGraph graph;
    /// One entry per edge position when the document has a `lengths` field.
    std::optional<std::vector<double>> lengths;
};

/// Parses
///   {"vertices": [{"id": str, "weight": int, "legs": int}],
///    "edges":    [{"id": str, "ends": [vid, vid]}],
///    "lengths":  {edge-id: positive number or "inf"}}        (optional)
/// Unknown fields are rejected. Edge ids are assigned in file order.
GraphDocument parse_graph_document(std::string_view text);
GraphDocument read_graph_file(const std::string& path);

std::string write_graph_document(const WeightedGraph& g, const std::vector<double>* lengths = nullptr);

}  // namespace cjac
