#include "hamlab/pattern.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hamlab/rng.hpp"

namespace hamlab {
namespace {

void check_problem(const PatternProblem& prob) {
  const int n = prob.graph.vertex_count();
  if (prob.edge_pattern && !prob.edge_colors) {
    throw std::invalid_argument("edge pattern given without an edge coloring");
  }
  if (prob.vertex_pattern && !prob.vertex_colors) {
    throw std::invalid_argument(
        "vertex pattern given without a vertex coloring");
  }
  if (prob.rainbow_required && !prob.edge_colors) {
    throw std::invalid_argument("rainbow constraint needs an edge coloring");
  }
  if (prob.edge_colors) {
    for (const Edge& e : prob.graph.edges()) {
      if (!prob.edge_colors->has_color(e.u, e.v)) {
        throw std::invalid_argument("edge coloring does not cover the graph");
      }
    }
  }
  if (prob.vertex_colors && prob.vertex_colors->n() != n) {
    throw std::invalid_argument("vertex coloring size differs from graph");
  }
  if (prob.edge_pattern && int(prob.edge_pattern->size()) != n) {
    throw std::invalid_argument("edge pattern length differs from n");
  }
  if (prob.vertex_pattern) {
    if (int(prob.vertex_pattern->size()) != n) {
      throw std::invalid_argument("vertex pattern length differs from n");
    }
    // A feasible vertex pattern uses each color exactly as often as the
    // class has members; anything else cannot be realized by any cycle.
    const auto& counts = prob.vertex_pattern->counts;
    const auto& sizes = prob.vertex_colors->class_sizes;
    if (counts.size() > sizes.size()) {
      throw std::invalid_argument("vertex pattern uses colors beyond palette");
    }
    for (size_t j = 0; j < sizes.size(); ++j) {
      const int want = j < counts.size() ? counts[j] : 0;
      if (want != sizes[j]) {
        throw std::invalid_argument(
            "vertex pattern color counts differ from class sizes");
      }
    }
  }
}

struct Searcher {
  const PatternProblem& prob;
  const PatternSearchParams& params;
  bool heuristic;
  int n;
  std::deque<int> path;
  std::vector<char> used;
  std::vector<int> color_load;  // rainbow: uses per edge color
  int lo = 0;                   // pattern position of path.front()
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::optional<HamCycle> found;

  int edge_color(int a, int b) const {
    return prob.edge_colors->color(a, b);
  }

  bool edge_ok(int a, int b, int pattern_idx) const {
    if (!prob.graph.has_edge(a, b)) return false;
    if (prob.edge_pattern || prob.rainbow_required) {
      const int c = edge_color(a, b);
      if (prob.edge_pattern && c != prob.edge_pattern->at(pattern_idx)) {
        return false;
      }
      if (prob.rainbow_required && color_load[c] > 0) return false;
    }
    return true;
  }

  bool vertex_ok(int w, int pattern_idx) const {
    return !prob.vertex_pattern ||
           prob.vertex_colors->color_of(w) ==
               prob.vertex_pattern->at(pattern_idx);
  }

  int mod_n(int x) const { return ((x % n) + n) % n; }

  void collect(bool back, std::vector<int>& out) const {
    out.clear();
    const int end = back ? path.back() : path.front();
    const int pos = back ? mod_n(lo + int(path.size()))
                         : mod_n(lo - 1);
    const int eidx = back ? mod_n(lo + int(path.size()) - 1) : mod_n(lo - 1);
    for (int w : prob.graph.neighbors(end)) {
      if (used[w]) continue;
      if (!vertex_ok(w, pos)) continue;
      if (!edge_ok(end, w, eidx)) continue;
      out.push_back(w);
    }
  }

  void push(bool back, int w) {
    used[w] = 1;
    if (prob.rainbow_required) {
      const int a = back ? path.back() : path.front();
      ++color_load[edge_color(a, w)];
    }
    if (back) {
      path.push_back(w);
    } else {
      path.push_front(w);
      lo = mod_n(lo - 1);
    }
  }

  void pop(bool back) {
    int w;
    if (back) {
      w = path.back();
      path.pop_back();
    } else {
      w = path.front();
      path.pop_front();
      lo = mod_n(lo + 1);
    }
    used[w] = 0;
    if (prob.rainbow_required) {
      const int a = back ? path.back() : path.front();
      --color_load[edge_color(a, w)];
    }
  }

  bool dfs() {
    ++nodes;
    if (heuristic && nodes > params.node_budget) {
      exhausted = true;
      return false;
    }
    if (int(path.size()) == n) {
      const int closing_idx = mod_n(lo + n - 1);
      if (!edge_ok(path.back(), path.front(), closing_idx)) return false;
      found = make_ham_cycle(std::vector<int>(path.begin(), path.end()));
      return true;
    }
    std::vector<int> back_cand, front_cand;
    collect(true, back_cand);
    if (back_cand.empty()) return false;
    collect(false, front_cand);
    if (front_cand.empty()) return false;
    const bool back = back_cand.size() <= front_cand.size();
    for (int w : back ? back_cand : front_cand) {
      push(back, w);
      if (dfs()) return true;
      pop(back);
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

PatternProblem make_pattern_problem(Graph g,
                                    std::optional<EdgeColoring> edge_colors,
                                    std::optional<VertexColoring> vertex_colors,
                                    std::optional<ColorPattern> edge_pattern,
                                    std::optional<ColorPattern> vertex_pattern,
                                    bool rainbow_required) {
  PatternProblem prob{std::move(g),          std::move(edge_colors),
                      std::move(vertex_colors), std::move(edge_pattern),
                      std::move(vertex_pattern), rainbow_required};
  check_problem(prob);
  return prob;
}

bool pattern_matches(const PatternProblem& prob, const HamCycle& h) {
  const int n = prob.graph.vertex_count();
  if (int(h.seq.size()) != n || n < 3) return false;
  for (int i = 0; i < n; ++i) {
    const int a = h.seq[i];
    const int b = h.seq[(i + 1) % n];
    if (!prob.graph.has_edge(a, b)) return false;
    if ((prob.edge_pattern || prob.rainbow_required) &&
        !prob.edge_colors->has_color(a, b)) {
      return false;
    }
  }
  if (prob.rainbow_required && !check_rainbow(h, *prob.edge_colors)) {
    return false;
  }
  if (!prob.edge_pattern && !prob.vertex_pattern) return true;
  for (int dir : {1, -1}) {
    for (int s = 0; s < n; ++s) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const int a = h.seq[(((s + dir * i) % n) + n) % n];
        const int b = h.seq[(((s + dir * (i + 1)) % n) + n) % n];
        if (prob.vertex_pattern &&
            prob.vertex_colors->color_of(a) != prob.vertex_pattern->at(i)) {
          ok = false;
        }
        if (ok && prob.edge_pattern &&
            prob.edge_colors->color(a, b) != prob.edge_pattern->at(i)) {
          ok = false;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

bool check_rainbow(const HamCycle& h, const EdgeColoring& ec) {
  const int n = int(h.seq.size());
  if (n < 3) return false;
  std::vector<int> colors;
  colors.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int a = h.seq[i];
    const int b = h.seq[(i + 1) % n];
    if (!ec.has_color(a, b)) return false;
    colors.push_back(ec.color(a, b));
  }
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

PatternSearchResult find_patterned(const PatternProblem& prob, SearchMode mode,
                                   std::uint64_t seed,
                                   const PatternSearchParams& params) {
  check_problem(prob);
  const int n = prob.graph.vertex_count();
  if (mode == SearchMode::Exact && n > params.exact_cap) {
    throw std::invalid_argument("exact pattern search capped at " +
                                std::to_string(params.exact_cap) +
                                " vertices");
  }
  PatternSearchResult res;
  if (n < 3) return res;

  std::vector<int> starts(n);
  for (int i = 0; i < n; ++i) starts[i] = i + 1;
  if (mode == SearchMode::Heuristic) {
    Rng rng(seed, "pattern-starts");
    rng.shuffle(starts);
  }
  Searcher s{prob, params, mode == SearchMode::Heuristic, n};
  s.used.assign(size_t(n) + 1, 0);
  const int palette = prob.edge_colors ? prob.edge_colors->palette : 1;
  s.color_load.assign(size_t(palette) + 1, 0);
  for (int v : starts) {
    if (!s.vertex_ok(v, 0)) continue;
    s.path = {v};
    s.lo = 0;
    s.used[v] = 1;
    const bool hit = s.dfs();
    s.used[v] = 0;
    if (hit) break;
    if (s.exhausted) break;
  }
  res.nodes = s.nodes;
  res.budget_exhausted = s.exhausted;
  if (s.found) {
    if (!pattern_matches(prob, *s.found)) {
      throw std::logic_error("pattern search produced a non-matching cycle");
    }
    res.cycle = std::move(s.found);
  }
  return res;
}

}  // namespace hamlab
