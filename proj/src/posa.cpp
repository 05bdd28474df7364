#include "hamlab/posa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

#include "hamlab/rng.hpp"

namespace hamlab {
namespace {

// One representative obtainable path per movable endpoint. Deduplicating by
// endpoint can miss obtainable paths, which is fine here: the solver only
// needs candidates, and every returned cycle is validated edge by edge.
struct EndClosure {
  std::vector<std::pair<int, std::vector<int>>> reps;  // discovery order
  std::uint64_t states = 0;
  bool budget_hit = false;
};

EndClosure endpoint_closure(const Graph& gw, const std::vector<int>& start,
                            const std::optional<Edge>& e_star,
                            std::uint64_t max_states) {
  EndClosure out;
  const int n = gw.vertex_count();
  std::vector<char> seen_end(static_cast<size_t>(n) + 1, 0);
  std::deque<std::vector<int>> queue;
  seen_end[start.back()] = 1;
  out.reps.emplace_back(start.back(), start);
  queue.push_back(start);
  std::vector<size_t> pos_of(static_cast<size_t>(n) + 1, 0);
  while (!queue.empty()) {
    if (out.states >= max_states) {
      out.budget_hit = true;
      break;
    }
    std::vector<int> path = std::move(queue.front());
    queue.pop_front();
    ++out.states;
    const size_t k = path.size();
    if (k < 4) continue;
    std::fill(pos_of.begin(), pos_of.end(), 0);
    for (size_t i = 0; i < k; ++i) pos_of[path[i]] = i + 1;
    for (int w : gw.neighbors(path.back())) {
      const size_t p = pos_of[w];
      if (p == 0) continue;
      const size_t i = p - 1;
      if (i < 1 || i > k - 3) continue;
      if (e_star && make_edge(path[i], path[i + 1]) == *e_star) continue;
      const int new_end = path[i + 1];
      if (seen_end[new_end]) continue;
      seen_end[new_end] = 1;
      std::vector<int> next(path.begin(), path.begin() + i + 1);
      next.insert(next.end(), path.rbegin(), path.rend() - (i + 1));
      out.reps.emplace_back(new_end, next);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

// Unvisited neighbor of v with maximum degree, ties broken uniformly.
// Returns 0 when v has no unvisited neighbor.
int pick_extension(const Graph& gw, int v, const std::vector<char>& on_path,
                   Rng& rng) {
  int best = 0;
  int best_deg = -1;
  std::uint64_t ties = 0;
  for (int w : gw.neighbors(v)) {
    if (on_path[w]) continue;
    const int d = gw.degree(w);
    if (d > best_deg) {
      best_deg = d;
      best = w;
      ties = 1;
    } else if (d == best_deg) {
      ++ties;
      if (rng.uniform_below(ties) == 0) best = w;
    }
  }
  return best;
}

void greedy_grow(const Graph& gw, std::vector<int>& path,
                 std::vector<char>& on_path, Rng& rng) {
  bool grew = true;
  while (grew) {
    grew = false;
    if (int w = pick_extension(gw, path.back(), on_path, rng)) {
      path.push_back(w);
      on_path[w] = 1;
      grew = true;
    }
    if (int w = pick_extension(gw, path.front(), on_path, rng)) {
      path.insert(path.begin(), w);
      on_path[w] = 1;
      grew = true;
    }
  }
}

enum class CycleOutcome { Finished, Reopened, Stuck };

// cyc lists a cycle in traversal order; the closing edge between cyc.back()
// and cyc.front() is already in gw. Spanning cycles end the solve. Shorter
// ones are reopened into a path one vertex longer: delete the lex-lowest
// deletable cycle edge with an endpoint seeing outside the cycle, then step
// to that endpoint's lowest outside neighbor.
CycleOutcome process_cycle(const Graph& gw, std::vector<int> cyc,
                           const std::optional<Edge>& e_star,
                           std::vector<int>& path, std::vector<char>& on_path,
                           PosaResult& res) {
  const int n = gw.vertex_count();
  const size_t m = cyc.size();
  if (static_cast<int>(m) == n) {
    HamCycle h = make_ham_cycle(std::move(cyc));
    if (validate_cycle(gw, h, e_star)) {
      res.cycle = std::move(h);
    } else {
      res.stats.phase = "invalid";
    }
    return CycleOutcome::Finished;
  }
  auto lowest_outside = [&](int v) {
    for (int w : gw.neighbors(v)) {
      if (!on_path[w]) return w;
    }
    return 0;
  };
  std::vector<char> sees_out(m, 0);
  for (size_t i = 0; i < m; ++i) sees_out[i] = lowest_outside(cyc[i]) != 0;
  int cut = -1;
  Edge cut_edge{0, 0};
  for (size_t i = 0; i < m; ++i) {
    const size_t j = (i + 1) % m;
    if (!sees_out[i] && !sees_out[j]) continue;
    const Edge e = make_edge(cyc[i], cyc[j]);
    if (e_star && e == *e_star) continue;
    if (cut < 0 || e < cut_edge) {
      cut = static_cast<int>(i);
      cut_edge = e;
    }
  }
  if (cut < 0) {
    res.stats.phase = "reopen-stuck";
    return CycleOutcome::Stuck;
  }
  std::vector<int> np;
  np.reserve(m + 1);
  for (size_t t = 0; t < m; ++t) np.push_back(cyc[(cut + 1 + t) % m]);
  if (lowest_outside(np.back()) == 0) std::reverse(np.begin(), np.end());
  const int y = lowest_outside(np.back());
  np.push_back(y);
  on_path[y] = 1;
  path = std::move(np);
  return CycleOutcome::Reopened;
}

}  // namespace

PosaResult posa_solve(const Graph& g, const std::vector<Edge>& boosters,
                      std::optional<Edge> required_edge,
                      const RotationParams& params, std::uint64_t seed) {
  PosaResult res;
  const int n = g.vertex_count();
  if (required_edge && !g.has_edge(required_edge->u, required_edge->v)) {
    throw std::invalid_argument("required edge is not an edge of the graph");
  }
  if (n < 3) {
    res.stats.phase = "rot-saturated";
    return res;
  }
  const std::uint64_t budget =
      params.state_budget ? params.state_budget
                          : 50ull * static_cast<std::uint64_t>(n) * n;
  Rng rng(seed, "posa");
  Graph gw = g;
  size_t cursor = 0;

  std::vector<int> path;
  std::vector<char> on_path(static_cast<size_t>(n) + 1, 0);
  if (required_edge) {
    path = {required_edge->u, required_edge->v};
  } else {
    int start = 1;
    int best_deg = -1;
    std::uint64_t ties = 0;
    for (int v = 1; v <= n; ++v) {
      const int d = gw.degree(v);
      if (d > best_deg) {
        best_deg = d;
        start = v;
        ties = 1;
      } else if (d == best_deg) {
        ++ties;
        if (rng.uniform_below(ties) == 0) start = v;
      }
    }
    path = {start};
  }
  for (int v : path) on_path[v] = 1;
  greedy_grow(gw, path, on_path, rng);

  auto budget_left = [&]() {
    return res.stats.states >= budget ? 0 : budget - res.stats.states;
  };

  while (true) {
    res.stats.longest_path =
        std::max(res.stats.longest_path, static_cast<int>(path.size()));
    if (budget_left() == 0) {
      res.stats.phase = "budget";
      return res;
    }

    bool progressed = false;
    EndClosure closures[2];
    for (int orient = 0; orient < 2 && !progressed; ++orient) {
      std::vector<int> base = path;
      if (orient == 1) std::reverse(base.begin(), base.end());
      closures[orient] =
          endpoint_closure(gw, base, required_edge, budget_left());
      res.stats.states += closures[orient].states;
      if (orient == 0) {
        res.stats.end_size = static_cast<int>(closures[orient].reps.size());
      }
      for (const auto& [v, rep] : closures[orient].reps) {
        if (int w = pick_extension(gw, v, on_path, rng)) {
          path = rep;
          path.push_back(w);
          on_path[w] = 1;
          progressed = true;
          break;
        }
      }
      if (!progressed && closures[orient].budget_hit) {
        res.stats.phase = "budget";
        return res;
      }
    }
    if (progressed) {
      greedy_grow(gw, path, on_path, rng);
      continue;
    }

    // Endpoint pairs realizable by some obtainable path, keyed canonically.
    std::map<Edge, std::vector<int>> closable;
    for (const auto& clo : closures) {
      for (const auto& [v, rep] : clo.reps) {
        if (rep.size() >= 3) closable.emplace(make_edge(rep.front(), v), rep);
      }
    }
    int swept = 0;
    for (const auto& [v, rep] : closures[0].reps) {
      if (swept >= params.two_sided_limit || budget_left() == 0) break;
      if (rep.size() < 3) continue;
      ++swept;
      std::vector<int> rev(rep.rbegin(), rep.rend());
      EndClosure two = endpoint_closure(gw, rev, required_edge, budget_left());
      res.stats.states += two.states;
      for (const auto& [w, rep2] : two.reps) {
        if (rep2.size() >= 3) {
          closable.emplace(make_edge(rep2.front(), w), rep2);
        }
      }
    }

    std::vector<int> to_close;
    for (const auto& [pair, rep] : closable) {
      if (gw.has_edge(pair.u, pair.v)) {
        to_close = rep;
        break;
      }
    }
    if (to_close.empty()) {
      while (cursor < boosters.size()) {
        const Edge f = boosters[cursor++];
        ++res.stats.boosters_consumed;
        auto it = closable.find(f);
        if (it == closable.end()) continue;
        if (!gw.has_edge(f.u, f.v)) {
          gw.add_edge(f.u, f.v);
          ++res.stats.boosters_added;
        }
        to_close = it->second;
        break;
      }
    }
    if (to_close.empty()) {
      res.stats.phase = "rot-saturated";
      return res;
    }
    switch (process_cycle(gw, std::move(to_close), required_edge, path,
                          on_path, res)) {
      case CycleOutcome::Finished:
        return res;
      case CycleOutcome::Stuck:
        return res;
      case CycleOutcome::Reopened:
        greedy_grow(gw, path, on_path, rng);
        break;
    }
  }
}

}  // namespace hamlab
