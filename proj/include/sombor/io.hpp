#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

// Edge-list text: the first data line holds n, every further data line
// holds "u v" with 0 <= u, v < n. '#' starts a comment, blank lines are
// ignored. Endpoints may appear in either order; serialization writes u < v.

/// Throws ParseError on malformed lines, out-of-range vertices, self-loops
/// or duplicate edges.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);

std::string serialize_edge_list(const Graph& g);

/// Undirected DOT with one "u -- v;" statement per edge and vertices
/// labelled "id (deg)".
std::string export_dot(const Graph& g);

}  // namespace sombor
