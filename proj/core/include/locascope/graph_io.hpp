#pragma once

#include <iosfwd>
#include <string>

#include "locascope/graph.hpp"

namespace locascope {

/// Text format: a header line "n m d" followed by m lines "u v" (0-based,
/// whitespace separated). Errors are Error{ParseError} naming the line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Writes the header and the edges as sorted pairs u < v.
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// Writes through a temporary file in the same directory and renames it over
/// `path`, so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace locascope
