#include "hamlab/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hamlab {
namespace {

std::vector<double> normalized(const std::vector<double>& alpha) {
  if (alpha.empty()) throw std::invalid_argument("empty color distribution");
  double sum = 0.0;
  for (double a : alpha) {
    if (a < 0.0) throw std::invalid_argument("negative color weight");
    sum += a;
  }
  if (sum <= 0.0) throw std::invalid_argument("color weights sum to zero");
  std::vector<double> out(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) out[i] = alpha[i] / sum;
  return out;
}

struct ProperSearch {
  const Graph& g;
  const EdgeColoring& colors;
  const ColorPattern& pattern;
  int n;
  int offset = 0;
  int dir = 1;
  std::vector<int> path;
  std::vector<char> used;

  ProperSearch(const Graph& g, const EdgeColoring& colors,
               const ColorPattern& pattern)
      : g(g), colors(colors), pattern(pattern), n(g.vertex_count()) {}

  // Pattern slot of the edge between path positions i and i+1 under the
  // current alignment: vertex at path position i sits at presentation
  // position offset + dir*i.
  int slot(int i) const {
    const int s = dir > 0 ? offset + i : offset - i - 1;
    return (s % n + n) % n;
  }

  bool step_ok(int u, int v, int i) const {
    if (!g.has_edge(u, v)) return false;
    if (!colors.has_color(u, v)) return true;
    return colors.color(u, v) == pattern.at(slot(i));
  }

  bool extend() {
    const int len = int(path.size());
    if (len == n) return step_ok(path.back(), path.front(), n - 1);
    for (int v : g.neighbors(path.back())) {
      if (used[v]) continue;
      if (!step_ok(path.back(), v, len - 1)) continue;
      path.push_back(v);
      used[v] = 1;
      if (extend()) return true;
      used[v] = 0;
      path.pop_back();
    }
    return false;
  }

  bool run() {
    for (offset = 0; offset < n; ++offset) {
      for (dir = 1; dir >= -1; dir -= 2) {
        path.assign(1, 1);
        used.assign(n + 1, 0);
        used[1] = 1;
        if (extend()) return true;
      }
    }
    return false;
  }
};

}  // namespace

CoupledSample sample_coupled(int n, double p, double beta,
                             const std::vector<double>& alpha, long long t,
                             Rng& rng) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0, 1]");
  if (beta <= 0.0) throw std::invalid_argument("rate factor must be positive");
  const long long pairs = (long long)n * (n - 1) / 2;
  if (t < 0 || t > pairs) {
    throw std::invalid_argument("committed pair count outside [0, " +
                                std::to_string(pairs) + "]");
  }
  const std::vector<double> dist = normalized(alpha);
  const double boosted = std::min(1.0, beta * p);

  CoupledSample out{Graph(n), EdgeColoring{}};
  out.colors.palette = int(dist.size());
  for (long long j = 0; j < pairs; ++j) {
    const Edge e = pair_from_index(n, j);
    if (j < t) {
      if (rng.bernoulli(boosted)) {
        out.graph.add_edge(e.u, e.v);
        out.colors.set(e.u, e.v, int(rng.categorical(dist)) + 1);
      }
    } else if (rng.bernoulli(p)) {
      out.graph.add_edge(e.u, e.v);
    }
  }
  return out;
}

bool proper_cycle_exists(const Graph& g, const EdgeColoring& colors,
                         const ColorPattern& pattern, int cap) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw std::invalid_argument("pattern decision capped at " +
                                std::to_string(cap) + " vertices");
  }
  if (int(pattern.size()) != n) {
    throw std::invalid_argument("pattern length differs from n");
  }
  if (n < 3) return false;
  ProperSearch search(g, colors, pattern);
  return search.run();
}

SweepResult coupling_monotonicity(int n, double p, double beta,
                                  const std::vector<double>& alpha,
                                  const ColorPattern& pattern,
                                  const std::vector<long long>& t_grid,
                                  int trials, std::uint64_t seed, int cap) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (int(pattern.size()) != n) {
    throw std::invalid_argument("pattern length differs from n");
  }
  for (int i = 0; i < int(pattern.size()); ++i) {
    if (pattern.at(i) > int(alpha.size())) {
      throw std::invalid_argument("pattern uses colors beyond the palette");
    }
  }

  SweepResult res;
  for (size_t row = 0; row < t_grid.size(); ++row) {
    const long long t = t_grid[row];
    SweepRow r;
    r.point = double(t);
    r.trials = trials;
    double edge_sum = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng(seed, "coupling", row * std::uint64_t(trials) + trial);
      CoupledSample s = sample_coupled(n, p, beta, alpha, t, rng);
      edge_sum += double(s.graph.edge_count());
      if (proper_cycle_exists(s.graph, s.colors, pattern, cap)) {
        ++r.successes;
      }
    }
    r.p_hat = double(r.successes) / trials;
    r.stderr_value = std::sqrt(r.p_hat * (1.0 - r.p_hat) / trials);
    r.stat = edge_sum / trials;
    res.rows.push_back(r);
  }
  return res;
}

}  // namespace hamlab
