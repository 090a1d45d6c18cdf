#pragma once

#include <string>

#include "cutideal/graph.hpp"

namespace cutideal {

/// Builds a graph from a family descriptor:
///
///   K<n>               complete graph
///   K<a>,<b>[,<c>...]  complete multipartite, parts laid out consecutively
///   C<k>  P<k>         cycle, path
///   K4-e               K4 minus the edge 2-4
///   clique-sum:<A>+<B>@<glue>
///
/// <glue> is "vertex" (last vertex of A with vertex 1 of B), "edge" (the
/// lexicographically last edge u-v of A with 1-2 of B), a vertex "<u>" or an
/// edge "<u>-<v>" of A. Operands are simple descriptors. Throws ParseError.
Graph parse_descriptor(const std::string& text);

/// Reads a graph file when `input` names an existing file, otherwise parses
/// it as a descriptor.
Graph load_graph(const std::string& input);

}  // namespace cutideal
