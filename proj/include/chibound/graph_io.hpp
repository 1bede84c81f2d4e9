#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

enum class GraphFormat { Graph6, Dimacs };

GraphFormat parse_format(std::string_view name);

/// One graph6 line, optional ">>graph6<<" prefix, no trailing newline required.
Graph parse_graph6(std::string_view line, std::size_t max_vertices = kDefaultMaxVertices);
std::string to_graph6(const Graph& g);

Graph parse_dimacs(std::istream& in, std::size_t max_vertices = kDefaultMaxVertices);
std::string to_dimacs(const Graph& g);

/// graph6: one graph per non-empty line. DIMACS: a single graph.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format,
                               std::size_t max_vertices = kDefaultMaxVertices);
Graph read_graph_file(const std::string& path, GraphFormat format,
                      std::size_t max_vertices = kDefaultMaxVertices);
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace chibound
