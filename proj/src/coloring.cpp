#include "hamlab/coloring.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hamlab/rng.hpp"

namespace hamlab {

int EdgeColoring::color(int u, int v) const {
  auto it = colors.find(edge_key(u, v));
  if (it == colors.end())
    throw std::invalid_argument("EdgeColoring: edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} has no color");
  return it->second;
}

EdgeColoring color_edges(const Graph& g, const std::vector<double>& alpha, uint64_t seed) {
  if (alpha.empty()) throw std::invalid_argument("color_edges: empty distribution");
  double sum = 0.0;
  for (double a : alpha) {
    if (!(a > 0.0)) throw std::invalid_argument("color_edges: weights must be positive");
    sum += a;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("color_edges: weights must sum to 1");
  EdgeColoring ec;
  ec.palette = int(alpha.size());
  ec.colors.reserve(g.edges().size() * 2);
  Rng rng(seed, "edge-colors");
  for (const auto& e : g.edges()) ec.set(e.u, e.v, rng.categorical(alpha) + 1);
  return ec;
}

EdgeColoring rainbow_color_edges(const Graph& g, int q, uint64_t seed) {
  if (q < 1) throw std::invalid_argument("rainbow_color_edges: palette must be positive");
  EdgeColoring ec;
  ec.palette = q;
  ec.colors.reserve(g.edges().size() * 2);
  Rng rng(seed, "rainbow-colors");
  for (const auto& e : g.edges()) ec.set(e.u, e.v, int(rng.uniform_below(uint64_t(q))) + 1);
  return ec;
}

int VertexColoring::color_of(int v) const {
  if (v < 1 || v >= int(color.size()))
    throw std::invalid_argument("VertexColoring: vertex out of range");
  return color[size_t(v)];
}

VertexColoring color_vertices_block(int n, const std::vector<int>& class_sizes) {
  if (n < 0) throw std::invalid_argument("color_vertices_block: negative n");
  if (class_sizes.empty()) throw std::invalid_argument("color_vertices_block: no classes");
  long long total = 0;
  for (int s : class_sizes) {
    if (s <= 0) throw std::invalid_argument("color_vertices_block: class sizes must be positive");
    total += s;
  }
  if (total != n) throw std::invalid_argument("color_vertices_block: class sizes must sum to n");
  VertexColoring vc;
  vc.palette = int(class_sizes.size());
  vc.class_sizes = class_sizes;
  vc.color.assign(size_t(n) + 1, 0);
  int v = 1;
  for (size_t c = 0; c < class_sizes.size(); ++c)
    for (int i = 0; i < class_sizes[c]; ++i) vc.color[size_t(v++)] = int(c) + 1;
  return vc;
}

ColorPattern::ColorPattern(std::vector<int> s) : seq(std::move(s)) {
  int maxc = 0;
  for (int c : seq) {
    if (c < 1) throw std::invalid_argument("ColorPattern: colors must be >= 1");
    maxc = std::max(maxc, c);
  }
  counts.assign(size_t(maxc), 0);
  for (int c : seq) ++counts[size_t(c) - 1];
}

}  // namespace hamlab
