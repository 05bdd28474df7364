#include "hamlab/ordered.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "hamlab/rng.hpp"

namespace hamlab {
namespace {

constexpr int kInf = std::numeric_limits<int>::max();

int count_flags(const std::vector<char>& f) {
  int c = 0;
  for (char x : f) c += x != 0;
  return c;
}

double layer1_prob(const LayeredGraph& lg) {
  if (!lg.layer_probs.empty() && lg.layer_probs.front() > 0.0) {
    return lg.layer_probs.front();
  }
  const Graph& g = lg.layers.front();
  const double total = double(g.vertex_count()) * (g.vertex_count() - 1) / 2;
  return total > 0 ? g.edge_count() / total : 0.0;
}

int diameter_budget_for(int n, const OrderedParams& params) {
  if (params.diameter_budget > 0) return params.diameter_budget;
  const double lll = std::log(std::log(std::log(double(n))));
  if (!(lll > 0.0)) return 3;
  return std::max(3, int(std::ceil(4.0 * std::log(double(n)) / lll)));
}

// First-layer core with cascading degree pruning. Vertices leaving the
// core through pruning join tiny (and avoid); vertices consumed by a
// connector just leave.
struct CoreState {
  const Graph& g1;
  double theta;
  VertexClassification& cls;
  std::vector<char> in_core;
  std::vector<int> deg;
  int size = 0;

  CoreState(const Graph& g1, double theta, VertexClassification& cls,
            const std::vector<char>& member)
      : g1(g1), theta(theta), cls(cls), in_core(member),
        deg(g1.vertex_count() + 1, 0) {
    const int n = g1.vertex_count();
    for (int v = 1; v <= n; ++v) {
      if (!in_core[v]) continue;
      ++size;
      for (int w : g1.neighbors(v)) deg[v] += in_core[w] != 0;
    }
    prune();
  }

  void remove(int v, bool mark_tiny, std::vector<int>& touched) {
    in_core[v] = 0;
    --size;
    if (mark_tiny) {
      cls.tiny[v] = 1;
      cls.avoid[v] = 1;
    }
    for (int w : g1.neighbors(v)) {
      if (in_core[w]) {
        --deg[w];
        touched.push_back(w);
      }
    }
  }

  void prune() {
    std::vector<int> pending;
    const int n = g1.vertex_count();
    for (int v = 1; v <= n; ++v) {
      if (in_core[v] && deg[v] <= theta) pending.push_back(v);
    }
    drain(pending);
  }

  void consume(int v) {
    if (!in_core[v]) return;
    std::vector<int> pending;
    remove(v, false, pending);
    drain(pending);
  }

  void drain(std::vector<int> pending) {
    while (!pending.empty()) {
      std::vector<int> next;
      for (int v : pending) {
        if (in_core[v] && deg[v] <= theta) remove(v, true, next);
      }
      pending = std::move(next);
    }
  }
};

// Bounded-depth BFS from src over bounce edges with all transit inside the
// core. dist/par describe core vertices only; src itself is external.
void side_bfs(const Graph& bounce, const std::vector<char>& core, int src,
              int depth, std::vector<int>& dist, std::vector<int>& par) {
  dist.assign(bounce.vertex_count() + 1, kInf);
  par.assign(bounce.vertex_count() + 1, 0);
  std::vector<int> frontier = {src};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int f : frontier) {
      for (int u : bounce.neighbors(f)) {
        if (!core[u] || dist[u] != kInf) continue;
        dist[u] = d + 1;
        par[u] = f;
        next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
}

std::vector<int> chain_to_root(const std::vector<int>& par, int from,
                               int root_sentinel) {
  std::vector<int> out;
  int cur = from;
  while (cur != root_sentinel) {
    out.push_back(cur);
    cur = par[cur];
  }
  return out;  // from .. (vertex whose parent is the sentinel)
}

bool is_simple(const std::vector<int>& path) {
  std::set<int> s(path.begin(), path.end());
  return s.size() == path.size();
}

}  // namespace

int VertexClassification::small_size() const { return count_flags(small); }
int VertexClassification::tiny_size() const { return count_flags(tiny); }
int VertexClassification::avoid_size() const { return count_flags(avoid); }

std::vector<int> SuperPath::concat() const {
  std::vector<int> out = anchor_paths.front();
  for (size_t v = 0; v < connectors.size(); ++v) {
    out.insert(out.end(), connectors[v].begin() + 1, connectors[v].end());
    out.insert(out.end(), anchor_paths[v + 1].begin() + 1,
               anchor_paths[v + 1].end());
  }
  return out;
}

int SuperPath::x_star() const { return anchor_paths.front().front(); }
int SuperPath::y_star() const { return anchor_paths.back().back(); }

VertexClassification classify(const LayeredGraph& lg,
                              const OrderedParams& params) {
  if (lg.layers.size() < 2) {
    throw std::invalid_argument("classification needs at least two layers");
  }
  const Graph& gamma1 = lg.layers[0];
  const Graph g12 = graph_union({lg.layers[0], lg.layers[1]});
  const Graph gu = lg.union_graph();
  const int n = gamma1.vertex_count();
  const double p1 = layer1_prob(lg);

  VertexClassification cls;
  cls.n = n;
  cls.theta_small =
      params.theta_small >= 0 ? params.theta_small : 0.5 * n * p1;
  cls.theta_tiny = params.theta_tiny >= 0 ? params.theta_tiny : 0.125 * n * p1;
  cls.small.assign(n + 1, 0);
  cls.tiny.assign(n + 1, 0);
  cls.avoid.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    cls.small[v] = g12.degree(v) <= cls.theta_small;
    cls.tiny[v] = gamma1.degree(v) <= cls.theta_tiny;
    if (cls.small[v] || cls.tiny[v]) cls.avoid[v] = 1;
  }
  std::vector<int> smalls;
  for (int v = 1; v <= n; ++v) {
    if (cls.small[v]) {
      smalls.push_back(v);
      for (int w : gu.neighbors(v)) cls.avoid[w] = 1;
    }
  }

  cls.small_count_ok = double(smalls.size()) <= std::cbrt(double(n)) + 1e-9;

  cls.small_spacing_ok = true;
  for (int s : smalls) {
    std::vector<int> dist(n + 1, kInf);
    std::vector<int> frontier = {s};
    dist[s] = 0;
    for (int d = 0; d < 4 && !frontier.empty(); ++d) {
      std::vector<int> next;
      for (int f : frontier) {
        for (int u : gu.neighbors(f)) {
          if (dist[u] != kInf) continue;
          dist[u] = d + 1;
          next.push_back(u);
          if (cls.small[u]) cls.small_spacing_ok = false;
        }
      }
      frontier = std::move(next);
    }
  }

  cls.small_girth_ok = true;
  std::vector<char> adj_s(n + 1, 0);
  std::vector<int> hits(n + 1, 0);
  for (int s : smalls) {
    for (int u : gu.neighbors(s)) adj_s[u] = 1;
    std::vector<int> touched;
    for (int u : gu.neighbors(s)) {
      for (int x : gu.neighbors(u)) {
        if (x == s) continue;
        if (adj_s[x]) cls.small_girth_ok = false;  // triangle s-u-x
        if (hits[x] == 0) touched.push_back(x);
        if (++hits[x] >= 2) cls.small_girth_ok = false;  // 4-cycle via x
      }
    }
    for (int u : gu.neighbors(s)) adj_s[u] = 0;
    for (int x : touched) hits[x] = 0;
  }
  return cls;
}

AnchorResult build_anchor_paths(const LayeredGraph& lg,
                                const VertexClassification& cls,
                                const std::vector<int>& s0_order,
                                const OrderedParams& params) {
  const Graph& gamma2 = lg.layers[1];
  const Graph g12 = graph_union({lg.layers[0], lg.layers[1]});
  const Graph gu = lg.union_graph();
  const int n = g12.vertex_count();

  AnchorResult res;
  res.used.assign(n + 1, 0);
  if (s0_order.empty()) {
    res.error = "empty prescribed order";
    return res;
  }
  std::vector<char> in_s0(n + 1, 0);
  for (int v : s0_order) {
    if (v < 1 || v > n || in_s0[v]) {
      res.error = "prescribed order not a set of distinct vertices";
      return res;
    }
    in_s0[v] = 1;
  }
  std::vector<char> near_small(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (!cls.small[s]) continue;
    for (int w : gu.neighbors(s)) near_small[w] = 1;
  }
  std::vector<char> x1_nb(n + 1, 0);

  for (size_t idx = 0; idx < s0_order.size(); ++idx) {
    const int v = s0_order[idx];
    if (!cls.tiny[v]) {
      res.paths.push_back({v});
      res.used[v] = 1;
      if (idx == 0) {
        for (int w : g12.neighbors(v)) x1_nb[w] = 1;
      }
      continue;
    }

    std::vector<char> on_path(n + 1, 0);
    on_path[v] = 1;
    // An endpoint or far interior must clear every fragile set; the hop
    // next to v may sit in small's neighborhood when v itself put it
    // there, which is unavoidable for a small v.
    auto clean = [&](int u) {
      return !res.used[u] && !on_path[u] && !cls.avoid[u] && !in_s0[u] &&
             (idx == 0 || !x1_nb[u]);
    };
    auto near_exempt = [&](int u) {
      return !res.used[u] && !on_path[u] && !cls.small[u] && !cls.tiny[u] &&
             !in_s0[u] && (idx == 0 || !x1_nb[u]) &&
             (!near_small[u] || (cls.small[v] && gu.has_edge(u, v)));
    };

    auto build_side = [&](std::vector<int>& side) {
      for (int u : g12.neighbors(v)) {
        if (clean(u)) {
          side = {u};
          return true;
        }
      }
      int attempts = 0;
      for (int a : gamma2.neighbors(v)) {
        if (!near_exempt(a)) continue;
        if (++attempts > params.anchor_attempts) break;
        for (int x : g12.neighbors(a)) {
          if (x != v && clean(x)) {
            side = {a, x};
            return true;
          }
        }
        for (int b : gamma2.neighbors(a)) {
          if (b == v || !clean(b)) continue;
          for (int x : g12.neighbors(b)) {
            if (x != v && x != a && clean(x)) {
              side = {a, b, x};
              return true;
            }
          }
        }
      }
      return false;
    };

    std::vector<int> side_a, side_b;
    if (!build_side(side_a)) {
      res.error = "no anchor path for vertex " + std::to_string(v);
      return res;
    }
    for (int u : side_a) on_path[u] = 1;
    if (!build_side(side_b)) {
      res.error = "no anchor path for vertex " + std::to_string(v);
      return res;
    }

    std::vector<int> path(side_a.rbegin(), side_a.rend());
    path.push_back(v);
    path.insert(path.end(), side_b.begin(), side_b.end());
    for (int u : path) res.used[u] = 1;
    res.paths.push_back(std::move(path));
    if (idx == 0) {
      for (int w : g12.neighbors(res.paths[0].front())) x1_nb[w] = 1;
    }
  }
  res.ok = true;
  return res;
}

ConnectorResult connect_paths(const LayeredGraph& lg,
                              VertexClassification& cls,
                              const AnchorResult& anchors,
                              const std::vector<int>& s0_order,
                              const OrderedParams& params) {
  const Graph& gamma1 = lg.layers[0];
  const Graph& gamma2 = lg.layers[1];
  const Graph g12 = graph_union({lg.layers[0], lg.layers[1]});
  const int n = gamma1.vertex_count();
  const int budget = diameter_budget_for(n, params);
  const int floor_size = int(std::ceil(params.core_floor_frac * n));

  ConnectorResult res;
  std::vector<char> member(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    member[v] = !anchors.used[v] && !cls.avoid[v];
  }
  CoreState core(gamma1, cls.theta_tiny, cls, member);
  res.core_min = core.size;
  if (core.size < floor_size) {
    res.error = "core below floor after initial pruning";
    return res;
  }

  std::vector<char> used = anchors.used;
  std::vector<int> ent_dist, ent_par, ex_dist, ex_par;
  for (size_t v = 0; v + 1 < s0_order.size(); ++v) {
    const int a = anchors.paths[v].back();
    const int b = anchors.paths[v + 1].front();
    std::vector<int> q;

    if (g12.has_edge(a, b)) {
      q = {a, b};
    } else {
      side_bfs(gamma2, core.in_core, a, 3, ent_dist, ent_par);
      side_bfs(gamma2, core.in_core, b, 3, ex_dist, ex_par);

      std::vector<int> dist(n + 1, kInf), par(n + 1, 0);
      std::vector<std::vector<int>> buckets(budget + 1);
      for (int u = 1; u <= n; ++u) {
        if (core.in_core[u] && ent_dist[u] <= budget) {
          dist[u] = ent_dist[u];
          if (ent_dist[u] <= budget) buckets[ent_dist[u]].push_back(u);
        }
      }
      for (int d = 0; d <= budget; ++d) {
        for (size_t i = 0; i < buckets[d].size(); ++i) {
          const int u = buckets[d][i];
          if (dist[u] != d) continue;
          for (int w : gamma1.neighbors(u)) {
            if (!core.in_core[w] || dist[w] != kInf) continue;
            dist[w] = d + 1;
            par[w] = u;
            if (d + 1 <= budget) buckets[d + 1].push_back(w);
          }
        }
      }

      std::vector<std::pair<int, int>> candidates;  // (total, meeting vertex)
      for (int u = 1; u <= n; ++u) {
        if (dist[u] == kInf || ex_dist[u] == kInf) continue;
        const int total = dist[u] + ex_dist[u];
        if (total <= budget) candidates.emplace_back(total, u);
      }
      std::sort(candidates.begin(), candidates.end());
      for (const auto& [total, u] : candidates) {
        // Core chain back to its entry root, whose parent lives on the
        // entry tree; then stitch the three segments.
        std::vector<int> walk;
        std::vector<int> core_chain;
        int cur = u;
        while (par[cur] != 0) {
          core_chain.push_back(cur);
          cur = par[cur];
        }
        core_chain.push_back(cur);
        std::vector<int> entry = chain_to_root(ent_par, cur, a);
        walk.push_back(a);
        for (auto it = entry.rbegin(); it != entry.rend(); ++it) {
          if (*it != cur) walk.push_back(*it);
        }
        for (auto it = core_chain.rbegin(); it != core_chain.rend(); ++it) {
          walk.push_back(*it);
        }
        std::vector<int> exit = chain_to_root(ex_par, u, b);
        for (auto it = exit.begin() + 1; it != exit.end(); ++it) {
          walk.push_back(*it);
        }
        walk.push_back(b);
        if (is_simple(walk)) {
          q = std::move(walk);
          break;
        }
      }
      if (q.empty()) {
        res.error = "no connector within budget between " + std::to_string(a) +
                    " and " + std::to_string(b);
        return res;
      }
    }

    res.lengths.push_back(int(q.size()) - 1);
    for (size_t i = 1; i + 1 < q.size(); ++i) {
      used[q[i]] = 1;
      core.consume(q[i]);
    }
    res.connectors.push_back(std::move(q));
    res.core_min = std::min(res.core_min, core.size);
    if (core.size < floor_size) {
      res.error = "core below floor after connector " + std::to_string(v + 1);
      return res;
    }
  }
  res.ok = true;
  return res;
}

Contraction contract_superpath(const Graph& g, const SuperPath& sp) {
  const int n = g.vertex_count();
  const std::vector<int> pst = sp.concat();
  if (!is_simple(pst)) throw std::logic_error("super-path revisits a vertex");
  Contraction c{Graph(1), std::nullopt, {}, {}, pst};
  if (pst.size() == 1) {
    c.graph = g;
    c.to_old.resize(n + 1);
    c.to_new.resize(n + 1);
    for (int v = 0; v <= n; ++v) c.to_old[v] = c.to_new[v] = v;
    return c;
  }
  std::vector<char> interior(n + 1, 0);
  for (size_t i = 1; i + 1 < pst.size(); ++i) interior[pst[i]] = 1;
  c.to_new.assign(n + 1, 0);
  c.to_old.assign(1, 0);
  for (int v = 1; v <= n; ++v) {
    if (!interior[v]) {
      c.to_old.push_back(v);
      c.to_new[v] = int(c.to_old.size()) - 1;
    }
  }
  Graph ng(int(c.to_old.size()) - 1);
  for (const Edge& e : g.edges()) {
    if (!interior[e.u] && !interior[e.v]) {
      ng.add_edge(c.to_new[e.u], c.to_new[e.v]);
    }
  }
  const Edge estar = make_edge(c.to_new[pst.front()], c.to_new[pst.back()]);
  if (!ng.has_edge(estar.u, estar.v)) ng.add_edge(estar.u, estar.v);
  c.graph = std::move(ng);
  c.e_star = estar;
  return c;
}

HamCycle expand_cycle(const Contraction& c, const HamCycle& h) {
  if (!c.e_star) {
    std::vector<int> seq;
    seq.reserve(h.seq.size());
    for (int v : h.seq) seq.push_back(c.to_old[v]);
    return make_ham_cycle(seq);
  }
  const int m = int(h.seq.size());
  const int xs = c.to_new[c.p_star.front()];
  const int ys = c.to_new[c.p_star.back()];
  int at = -1;
  for (int i = 0; i < m; ++i) {
    const int u = h.seq[i], w = h.seq[(i + 1) % m];
    if ((u == xs && w == ys) || (u == ys && w == xs)) {
      at = i;
      break;
    }
  }
  if (at < 0) throw std::logic_error("cycle does not traverse the joint edge");
  std::vector<int> seq;
  for (int i = 0; i < m; ++i) seq.push_back(c.to_old[h.seq[(at + 1 + i) % m]]);
  // seq runs from one path endpoint around to the other; splice the
  // interior so the path reads endpoint-to-endpoint at the seam.
  std::vector<int> interior(c.p_star.begin() + 1, c.p_star.end() - 1);
  if (seq.back() != c.p_star.front()) {
    std::reverse(interior.begin(), interior.end());
  }
  seq.insert(seq.end(), interior.begin(), interior.end());
  return make_ham_cycle(seq);
}

bool validate_order(const HamCycle& h, const std::vector<int>& s0_order,
                    bool strict) {
  if (s0_order.empty()) return true;
  std::set<int> wanted(s0_order.begin(), s0_order.end());
  if (wanted.size() != s0_order.size()) return false;
  std::vector<int> extracted;
  for (int v : h.seq) {
    if (wanted.count(v)) extracted.push_back(v);
  }
  if (extracted.size() != s0_order.size()) return false;
  const int k = int(extracted.size());
  auto cyclic_match = [&](const std::vector<int>& seq) {
    for (int r = 0; r < k; ++r) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        ok = seq[(r + i) % k] == s0_order[i];
      }
      if (ok) return true;
    }
    return false;
  };
  if (cyclic_match(extracted)) return true;
  if (strict) return false;
  std::reverse(extracted.begin(), extracted.end());
  return cyclic_match(extracted);
}

LayeredGraph synthesize_layers(const Graph& g, const OrderedParams& params,
                               std::uint64_t seed) {
  const int n = g.vertex_count();
  const double total = double(n) * (n - 1) / 2;
  const double phat = total > 0 ? g.edge_count() / total : 0.0;
  const double q_even = 1.0 - std::pow(1.0 - phat, 0.25);
  const double p34 = std::min(params.omega / (4.0 * n), q_even);
  const double p1 = 1.0 - std::sqrt(1.0 - phat) / (1.0 - p34);
  const double probs[4] = {p1, p1, p34, p34};

  LayeredGraph lg;
  lg.n = n;
  lg.layer_probs = {p1, p1, p34, p34};
  for (int i = 0; i < 4; ++i) lg.layers.emplace_back(n);

  // Each edge lands in a nonempty layer subset with the conditional
  // probability of that subset given presence, so the union reproduces g
  // exactly and each layer is marginally correct.
  std::vector<double> weights(16, 0.0);
  double wsum = 0.0;
  for (int mask = 1; mask < 16; ++mask) {
    double w = 1.0;
    for (int i = 0; i < 4; ++i) {
      w *= (mask >> i & 1) ? probs[i] : 1.0 - probs[i];
    }
    weights[mask] = w;
    wsum += w;
  }
  std::vector<double> dist(15, 0.0);
  if (wsum > 0.0) {
    for (int mask = 1; mask < 16; ++mask) {
      dist[mask - 1] = weights[mask] / wsum;
    }
  }

  for (const Edge& e : g.edges()) {
    Rng rng(seed, "layer-split",
            std::uint64_t(pair_index(n, e.u, e.v)));
    const int mask = int(rng.categorical(dist)) + 1;
    for (int i = 0; i < 4; ++i) {
      if (mask >> i & 1) lg.layers[i].add_edge(e.u, e.v);
    }
  }
  return lg;
}

OrderedResult solve_ordered(const LayeredGraph& lg,
                            const std::vector<int>& s0_order,
                            const OrderedParams& params, std::uint64_t seed) {
  if (lg.layers.size() < 2) {
    throw std::invalid_argument("ordered pipeline needs at least two layers");
  }
  OrderedResult res;
  VertexClassification cls = classify(lg, params);
  res.report.small_size = cls.small_size();
  res.report.small_count_ok = cls.small_count_ok;
  res.report.small_spacing_ok = cls.small_spacing_ok;
  res.report.small_girth_ok = cls.small_girth_ok;

  AnchorResult anchors = build_anchor_paths(lg, cls, s0_order, params);
  if (!anchors.ok) {
    res.report.stage = "anchor";
    res.report.detail = anchors.error;
    res.report.tiny_size = cls.tiny_size();
    res.report.avoid_size = cls.avoid_size();
    return res;
  }

  ConnectorResult conn =
      connect_paths(lg, cls, anchors, s0_order, params);
  res.report.core_min = conn.core_min;
  res.report.connector_lengths = conn.lengths;
  res.report.tiny_size = cls.tiny_size();
  res.report.avoid_size = cls.avoid_size();
  if (!conn.ok) {
    res.report.stage = "connect";
    res.report.detail = conn.error;
    return res;
  }

  SuperPath sp{s0_order, anchors.paths, conn.connectors};
  res.report.pstar_len = int(sp.concat().size());

  std::vector<Graph> first3(lg.layers.begin(),
                            lg.layers.begin() +
                                std::min<size_t>(3, lg.layers.size()));
  const Graph g123 = graph_union(first3);
  Contraction ctr = contract_superpath(g123, sp);
  if (ctr.graph.vertex_count() < 3) {
    res.report.stage = "contract";
    res.report.detail = "contracted graph too small";
    return res;
  }

  std::vector<Edge> boosters;
  if (lg.layers.size() >= 4) {
    for (const Edge& e : lg.layers[3].edges()) {
      if (ctr.to_new[e.u] && ctr.to_new[e.v]) {
        boosters.push_back(make_edge(ctr.to_new[e.u], ctr.to_new[e.v]));
      }
    }
    Rng(seed, "boosters").shuffle(boosters);
  }

  PosaResult pr = posa_solve(ctr.graph, boosters, ctr.e_star, params.rotation,
                             Rng(seed, "completion").next_u64());
  res.report.boosters_used = pr.stats.boosters_added;
  if (!pr.cycle) {
    res.report.stage = "complete";
    res.report.detail = pr.stats.phase;
    return res;
  }

  HamCycle h = expand_cycle(ctr, *pr.cycle);
  if (!validate_cycle(lg.union_graph(), h) || !validate_order(h, s0_order)) {
    res.report.stage = "validate";
    res.report.detail = "expanded cycle failed validation";
    return res;
  }
  res.report.stage = "done";
  res.cycle = std::move(h);
  res.super_path = std::move(sp);
  return res;
}

OrderedResult solve_ordered(const Graph& g, const std::vector<int>& s0_order,
                            const OrderedParams& params, std::uint64_t seed) {
  return solve_ordered(synthesize_layers(g, params, seed), s0_order, params,
                       seed);
}

}  // namespace hamlab
