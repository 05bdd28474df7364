#pragma once

#include <unordered_map>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// Edge colors are 1..palette; the map only holds colored edges.
struct EdgeColoring {
  int palette = 1;
  std::unordered_map<uint64_t, int> colors;

  bool has_color(int u, int v) const { return colors.count(edge_key(u, v)) != 0; }
  int color(int u, int v) const;
  void set(int u, int v, int c) { colors[edge_key(u, v)] = c; }
};

// Every edge gets an independent color with distribution alpha (alpha[i] is the
// probability of color i+1). alpha must be positive and sum to 1.
EdgeColoring color_edges(const Graph& g, const std::vector<double>& alpha, uint64_t seed);

// Uniform colors from a palette of size q.
EdgeColoring rainbow_color_edges(const Graph& g, int q, uint64_t seed);

// Vertex colors are 1..palette; color[v] indexed 1..n.
struct VertexColoring {
  int palette = 1;
  std::vector<int> color;
  std::vector<int> class_sizes;

  int n() const { return int(color.size()) - 1; }
  int color_of(int v) const;
};

// Contiguous blocks: the first class_sizes[0] vertices get color 1, and so on.
// class_sizes must be positive and sum to n.
VertexColoring color_vertices_block(int n, const std::vector<int>& class_sizes);

// A cyclic color sequence c_1..c_n; position i constrains either the i-th
// traversed edge or the i-th visited vertex, depending on use.
struct ColorPattern {
  std::vector<int> seq;     // colors at positions, 0-indexed storage
  std::vector<int> counts;  // counts[c-1] = occurrences of color c

  ColorPattern() = default;
  explicit ColorPattern(std::vector<int> s);

  int size() const { return int(seq.size()); }
  int at(int pos) const { return seq[size_t(pos)]; }  // 0-based position
};

}  // namespace hamlab
