#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fva/graph.hpp"
#include "fva/rational.hpp"

namespace fva {

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Errors name the byte offset.
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Plain adjacency-list text: first the vertex count, then one "u v" pair per edge.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

} // namespace fva
