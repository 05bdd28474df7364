#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace hamlab {

// Undirected edge, canonical form u < v.
struct Edge {
  int u = 0;
  int v = 0;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
inline bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
inline bool operator<(const Edge& a, const Edge& b) {
  return a.u < b.u || (a.u == b.u && a.v < b.v);
}

inline uint64_t edge_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (uint64_t(uint32_t(u)) << 32) | uint32_t(v);
}

struct EdgeHash {
  size_t operator()(const Edge& e) const {
    return std::hash<uint64_t>()(edge_key(e.u, e.v));
  }
};

// Position of the pair {u,v}, u < v, in the lexicographic enumeration of all
// C(n,2) pairs of [n]: (1,2),(1,3),...,(1,n),(2,3),... Zero-based.
inline long long pair_index(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  const long long a = u - 1;
  return a * n - a * (a + 1) / 2 + (v - u - 1);
}

inline Edge pair_from_index(int n, long long idx) {
  int u = 1;
  while (idx >= n - u) {
    idx -= n - u;
    ++u;
  }
  return Edge{u, u + 1 + int(idx)};
}

// Simple undirected graph on vertices 1..n. Adjacency lists are kept sorted
// ascending and the edge list sorted lexicographically, so iteration order is
// reproducible everywhere.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// G(n,p): every pair independently with probability p.
// Identical (n, p, seed) give an identical graph.
Graph gen_gnp(int n, double p, uint64_t seed);

struct LayeredGraph {
  int n = 0;
  std::vector<Graph> layers;
  std::vector<double> layer_probs;

  Graph union_graph() const;
};

// Independent G(n, p_i) per layer; layer i draws from a stream derived from
// (seed, "layer", i), so layers are independent and order-insensitive.
LayeredGraph gen_layered(int n, const std::vector<double>& layer_probs, uint64_t seed);

Graph graph_union(const Graph& a, const Graph& b);
Graph graph_union(const std::vector<Graph>& gs);

// Neighbors of S excluding S itself.
std::vector<int> neighborhood(const Graph& g, const std::vector<int>& s);

}  // namespace hamlab
