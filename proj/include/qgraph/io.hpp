#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Line-oriented graph format:
///
///     # comment
///     V E
///     u v [length]     (E lines)
///
/// Either every edge line carries a length or none does; without lengths
/// every edge gets `default_length`. Errors are ParseError with the 1-based
/// line number.
MetricGraph parse_graph(std::istream& in, double default_length = 1.0);

MetricGraph read_graph_file(const std::filesystem::path& path, double default_length = 1.0);

/// Inverse of parse_graph (lengths always written, 17 significant digits).
std::string format_graph(const MetricGraph& mg);

} // namespace qgraph
