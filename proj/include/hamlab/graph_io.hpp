#pragma once

#include <optional>
#include <string>

#include "hamlab/coloring.hpp"
#include "hamlab/graph.hpp"

namespace hamlab {

// Graph file format: header "n m", then m lines "u v" (or "u v c" when edges
// carry colors). Vertices are 1-indexed. Lines must be consistently colored or
// consistently plain.
struct GraphFile {
  Graph graph;
  std::optional<EdgeColoring> colors;
};

GraphFile read_graph_file(const std::string& path);
Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);
void write_colored_graph(const Graph& g, const EdgeColoring& ec, const std::string& path);

// Vertex coloring file: n lines "v c", each vertex exactly once.
VertexColoring read_vertex_coloring(const std::string& path);
void write_vertex_coloring(const VertexColoring& vc, const std::string& path);

// One line of whitespace-separated integers.
ColorPattern read_pattern(const std::string& path);
std::vector<int> read_vertex_list(const std::string& path);

}  // namespace hamlab
