#ifndef KCOLOR_GRAPH_IO_HPP
#define KCOLOR_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kcolor/graph.hpp"

namespace kcolor {

/// Reads DIMACS .col edge format: "c" comment lines, one "p edge N M"
/// header, then "e u v" lines with 1-based endpoints. Duplicate edges and
/// both orientations collapse; vertices are renumbered to 0-based.
/// A declared edge count that disagrees with the deduplicated count is a
/// warning (appended to *warnings when given), not an error.
/// Throws ParseError on a missing or duplicate header, ids outside 1..N,
/// self-loops, or malformed lines.
Graph load_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);

/// Reads a plain edge list: one "u v" pair per line, 0-based, whitespace
/// separated. An optional leading "n=<N>" line fixes the vertex count;
/// otherwise it is 1 + the largest id seen. Throws ParseError on
/// non-integer tokens, negative ids, or self-loops.
Graph load_edge_list(std::istream& in);

void serialize_dimacs(const Graph& g, std::ostream& out);
void serialize_edge_list(const Graph& g, std::ostream& out);

// String-based conveniences.
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
Graph parse_edge_list(std::string_view text);
std::string dimacs_string(const Graph& g);
std::string edge_list_string(const Graph& g);

} // namespace kcolor

#endif
