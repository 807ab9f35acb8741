#pragma once

#include <istream>
#include <string>
#include <vector>

#include "submatch/graph.hpp"

namespace submatch {

// Edge-list text format: header "n m", then m lines "u v" (0-based, LF).
// serialize(parse(text)) is the identity on serialized texts, including the
// edge order and the orientation written on each line.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

// graph6, one graph per line: N(n) header with offset 63, then the upper
// triangle of the adjacency matrix packed MSB-first into 6-bit chunks in the
// order (0,1),(0,2),(1,2),(0,3),... Edges are emitted in row-major
// upper-triangle order, i.e. sorted by (u,v) with u < v.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

// One graph per line; tolerates a leading ">>graph6<<" header and a trailing
// newline. Any other empty line is a ParseError.
std::vector<Graph> parse_graph6_stream(std::istream& in);

}  // namespace submatch
