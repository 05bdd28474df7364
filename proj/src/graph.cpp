#include "hamlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hamlab/rng.hpp"

namespace hamlab {

Graph::Graph(int n) : n_(n), adj_(size_t(n) + 1) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) throw std::invalid_argument("Graph: vertex out of range");
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
  }
  if (!std::is_sorted(edges.begin(), edges.end())) std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw std::invalid_argument("Graph: duplicate edge");
  edges_ = std::move(edges);
  std::vector<int> deg(size_t(n_) + 1, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 1; v <= n_; ++v) adj_[v].reserve(deg[v]);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (int v = 1; v <= n_; ++v) std::sort(adj_[v].begin(), adj_[v].end());
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return int(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("Graph: duplicate edge");
  Edge e = make_edge(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

Graph gen_gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p outside [0,1]");
  std::vector<Edge> edges;
  if (p > 0.0) {
    Rng rng(seed, "gnp");
    edges.reserve(size_t(p * double(n) * double(n - 1) / 2.0 * 1.1) + 16);
    for (int u = 1; u < n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng.bernoulli(p)) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph LayeredGraph::union_graph() const {
  if (layers.empty()) return Graph(n);
  Graph g = layers[0];
  for (size_t i = 1; i < layers.size(); ++i) g = graph_union(g, layers[i]);
  return g;
}

LayeredGraph gen_layered(int n, const std::vector<double>& layer_probs, uint64_t seed) {
  if (layer_probs.empty()) throw std::invalid_argument("gen_layered: empty layer list");
  LayeredGraph lg;
  lg.n = n;
  lg.layer_probs = layer_probs;
  lg.layers.reserve(layer_probs.size());
  for (size_t i = 0; i < layer_probs.size(); ++i)
    lg.layers.push_back(gen_gnp(n, layer_probs[i], Rng::derive_stream(seed, "layer", i)));
  return lg;
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count())
    throw std::invalid_argument("graph_union: vertex counts differ");
  std::vector<Edge> merged;
  merged.reserve(a.edges().size() + b.edges().size());
  std::merge(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return Graph(a.vertex_count(), std::move(merged));
}

Graph graph_union(const std::vector<Graph>& gs) {
  if (gs.empty()) throw std::invalid_argument("graph_union: empty layer list");
  Graph g = gs[0];
  for (size_t i = 1; i < gs.size(); ++i) g = graph_union(g, gs[i]);
  return g;
}

std::vector<int> neighborhood(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in_s(size_t(g.vertex_count()) + 1, 0), out(size_t(g.vertex_count()) + 1, 0);
  for (int v : s) in_s[v] = 1;
  for (int v : s)
    for (int w : g.neighbors(v))
      if (!in_s[w]) out[w] = 1;
  std::vector<int> res;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (out[v]) res.push_back(v);
  return res;
}

}  // namespace hamlab
