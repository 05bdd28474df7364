#include "hamlab/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hamlab/brute_force.hpp"
#include "hamlab/rng.hpp"

namespace hamlab {
namespace {

// Fenwick tree over labels, holding 1 for each unvisited vertex.
struct UnvisitedCounter {
  int n;
  std::vector<int> tree;

  explicit UnvisitedCounter(int n) : n(n), tree(n + 1, 0) {
    for (int v = 1; v <= n; ++v) {
      for (int i = v; i <= n; i += i & -i) ++tree[i];
    }
  }
  void remove(int v) {
    for (int i = v; i <= n; i += i & -i) --tree[i];
  }
  int below(int v) const {
    int s = 0;
    for (int i = v - 1; i > 0; i -= i & -i) s += tree[i];
    return s;
  }
};

std::optional<HamCycle> solve_gadget(const Graph& g, const GreedyParams& params,
                                     std::uint64_t seed, std::string* phase) {
  if (g.vertex_count() <= params.brute_cap) {
    return brute_hamilton(g, nullptr, params.brute_cap);
  }
  PosaResult r = posa_solve(g, {}, std::nullopt, params.rotation,
                            Rng(seed, "greedy-completion").next_u64());
  if (!r.cycle) *phase = r.stats.phase;
  return r.cycle;
}

}  // namespace

std::pair<double, double> split_probability(double p, double frac) {
  if (p < 0.0 || p >= 1.0) throw std::invalid_argument("p outside [0, 1)");
  if (frac <= 0.0 || frac > 1.0) {
    throw std::invalid_argument("frac outside (0, 1]");
  }
  const double p1 = frac * p;
  return {p1, 1.0 - (1.0 - p) / (1.0 - p1)};
}

GreedyResult greedy_low_inversion(const LayeredGraph& lg,
                                  const GreedyParams& params,
                                  std::uint64_t seed) {
  if (lg.layers.size() != 2) {
    throw std::invalid_argument("greedy walk needs exactly two layers");
  }
  const Graph& g1 = lg.layers[0];
  const Graph& g2 = lg.layers[1];
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n) {
    throw std::invalid_argument("layer vertex counts differ");
  }
  if (n < 3) throw std::invalid_argument("need at least three vertices");

  int u_target = params.u_target;
  if (u_target < 0) {
    const double p1 =
        lg.layer_probs.empty() ? 0.0 : lg.layer_probs.front();
    if (p1 <= 0.0) {
      throw std::invalid_argument(
          "default stop size needs a positive first-layer probability");
    }
    u_target = std::max(4, int(std::lround(2.0 * std::log(double(n)) / p1)));
    u_target = std::min(u_target, n - 1);
  }

  GreedyResult res;
  GreedyTranscript& tr = res.transcript;
  std::vector<char> visited(n + 1, 0);
  UnvisitedCounter counter(n);
  tr.walk.push_back(1);
  tr.a.push_back(0);
  visited[1] = 1;
  counter.remove(1);
  int remaining = n - 1;

  while (remaining > u_target) {
    int next = 0;
    for (int w : g1.neighbors(tr.walk.back())) {
      if (!visited[w]) {
        next = w;
        break;
      }
    }
    if (next == 0) {
      tr.stuck = true;
      break;
    }
    tr.a.push_back(counter.below(next));
    counter.remove(next);
    visited[next] = 1;
    tr.walk.push_back(next);
    --remaining;
  }

  tr.j0 = int(tr.walk.size());
  for (int v = 1; v <= n; ++v) {
    if (!visited[v]) tr.unvisited.push_back(v);
  }
  tr.j1 = tr.unvisited.empty() ? 0 : tr.unvisited.front();
  long long a_sum = 0;
  for (long long a : tr.a) a_sum += a;
  tr.walk_bound =
      a_sum + (long long)tr.unvisited.size() * (n - (long long)tr.j1);

  const std::vector<int>& walk = tr.walk;
  std::vector<int> final_seq;

  if (tr.unvisited.empty()) {
    if (tr.j0 >= 3 &&
        (g1.has_edge(walk.back(), 1) || g2.has_edge(walk.back(), 1))) {
      final_seq = walk;
    } else {
      tr.failure = "walk covered the graph but no edge closes it";
      return res;
    }
  } else if (tr.j0 == 1) {
    // Degenerate walk: the cycle is a Hamilton cycle of the completion
    // layer on the unvisited set plus vertex 1.
    std::vector<int> to_old = {0, 1};
    to_old.insert(to_old.end(), tr.unvisited.begin(), tr.unvisited.end());
    const int gn = int(to_old.size()) - 1;
    std::vector<int> to_new(n + 1, 0);
    for (int i = 1; i <= gn; ++i) to_new[to_old[i]] = i;
    Graph gadget(gn);
    for (const Edge& e : g2.edges()) {
      if (to_new[e.u] && to_new[e.v]) gadget.add_edge(to_new[e.u], to_new[e.v]);
    }
    std::string phase;
    auto cyc = solve_gadget(gadget, params, seed, &phase);
    if (!cyc) {
      tr.failure = "completion failed (" +
                   (phase.empty() ? std::string("exhausted") : phase) +
                   "): unvisited=" + std::to_string(tr.unvisited.size());
      return res;
    }
    for (int v : cyc->seq) final_seq.push_back(to_old[v]);
  } else {
    // Gadget: unvisited set, the two walk ends as attachment terminals,
    // and a degree-2 hub whose forced edges turn a Hamilton cycle into a
    // Hamilton path of the completion layer between the terminals.
    const int m = int(tr.unvisited.size());
    const int t_front = m + 1, t_back = m + 2, hub = m + 3;
    std::vector<int> to_new(n + 1, 0);
    for (int i = 0; i < m; ++i) to_new[tr.unvisited[i]] = i + 1;
    Graph gadget(m + 3);
    for (const Edge& e : g2.edges()) {
      if (to_new[e.u] && to_new[e.v]) gadget.add_edge(to_new[e.u], to_new[e.v]);
    }
    for (int u : tr.unvisited) {
      if (g2.has_edge(1, u)) gadget.add_edge(t_front, to_new[u]);
      if (g2.has_edge(walk.back(), u)) gadget.add_edge(t_back, to_new[u]);
    }
    gadget.add_edge(hub, t_front);
    gadget.add_edge(hub, t_back);

    std::string phase;
    auto cyc = solve_gadget(gadget, params, seed, &phase);
    if (!cyc) {
      tr.failure =
          "completion failed (" +
          (phase.empty() ? std::string("exhausted") : phase) +
          "): unvisited=" + std::to_string(m) +
          " front-attach=" + std::to_string(gadget.degree(t_front) - 1) +
          " back-attach=" + std::to_string(gadget.degree(t_back) - 1);
      return res;
    }
    std::vector<int> path;  // gadget labels, hub removed
    const int gn = m + 3;
    int hub_pos = 0;
    while (cyc->seq[hub_pos] != hub) ++hub_pos;
    for (int i = 1; i < gn; ++i) path.push_back(cyc->seq[(hub_pos + i) % gn]);
    if (path.front() != t_back) std::reverse(path.begin(), path.end());
    final_seq = walk;
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      final_seq.push_back(tr.unvisited[path[i] - 1]);
    }
  }

  HamCycle h = make_ham_cycle(final_seq);
  if (!validate_cycle(lg.union_graph(), h)) {
    throw std::logic_error("assembled cycle failed validation");
  }
  tr.completed = true;
  res.cycle = std::move(h);
  return res;
}

}  // namespace hamlab
