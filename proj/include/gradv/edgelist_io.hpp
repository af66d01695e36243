#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gradv/graph.hpp"
#include "gradv/operators.hpp"

namespace gradv {

// Edge-list text format: one edge per line as src<TAB>dst<TAB>length,
// '#'-prefixed comment lines ignored. Node tokens are either all
// nonnegative integers (used as indices) or all label strings (indexed by
// first appearance); mixing the two is a parse error.

Graph read_edge_list(std::istream& is);
Graph read_edge_list_file(const std::string& path);

// Writes edges sorted by (src, dst); labels when the graph has them.
void write_edge_list(const Graph& g, std::ostream& os);
void write_edge_list_file(const Graph& g, const std::string& path);

// Coordinate sidecar: node<TAB>x<TAB>y per node.
void write_coordinates(const Graph& g,
                       const std::vector<std::pair<double, double>>& coords,
                       std::ostream& os);

// Initial-condition file: node<WS>value pairs, unlisted nodes default to
// zero. Tokens must match the graph's label space.
StateVector read_mass_file(const Graph& g, std::istream& is);

// Resolve a node token (label, or decimal index for unlabeled graphs).
NodeId resolve_node(const Graph& g, const std::string& token);

}  // namespace gradv
