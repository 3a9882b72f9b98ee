#pragma once

#include <gdp/graph.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>

namespace gdp {

/// Reads `u v` pairs of 1-based node ids, one per line. Blank lines and lines
/// starting with '#' are skipped. Self-loops, duplicate edges (in either
/// orientation) and malformed lines raise ParseError carrying the line number.
/// The node count is the largest id seen unless `node_count` is given.
SimpleGraph read_edge_list(std::istream& in, std::optional<std::size_t> node_count = std::nullopt);

/// Writes the graph as 1-based `u v` lines with u < v.
void write_edge_list(std::ostream& out, const SimpleGraph& g);

/// Whitespace-separated integers; '#' starts a comment running to end of line.
DegreeSequence read_degree_file(std::istream& in);

void write_degrees(std::ostream& out, std::span<const degree_t> d);

} // namespace gdp
