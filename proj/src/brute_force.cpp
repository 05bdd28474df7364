#include "hamlab/brute_force.hpp"

#include <stdexcept>
#include <string>

namespace hamlab {
namespace {

struct CycleSearch {
  const Graph& g;
  const std::function<bool(const HamCycle&)>& constraint;
  std::vector<int> path;
  std::vector<char> used;
  std::optional<HamCycle> found;

  bool extend() {
    const int n = g.vertex_count();
    if (static_cast<int>(path.size()) == n) {
      if (!g.has_edge(path.back(), 1)) return false;
      HamCycle h{path};
      if (constraint && !constraint(h)) return false;
      found = std::move(h);
      return true;
    }
    for (int w : g.neighbors(path.back())) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  }
};

void collect_from(const Graph& g, std::vector<int>& path,
                  std::vector<char>& used, std::vector<HamCycle>& out) {
  const int n = g.vertex_count();
  if (static_cast<int>(path.size()) == n) {
    if (g.has_edge(path.back(), 1)) out.push_back(HamCycle{path});
    return;
  }
  for (int w : g.neighbors(path.back())) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    collect_from(g, path, used, out);
    path.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::optional<HamCycle> brute_hamilton(
    const Graph& g, const std::function<bool(const HamCycle&)>& constraint,
    int cap) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw std::invalid_argument("brute_hamilton: graph exceeds cap of " +
                                std::to_string(cap) + " vertices");
  }
  if (n < 3) return std::nullopt;
  CycleSearch search{g, constraint, {1},
                     std::vector<char>(static_cast<size_t>(n) + 1, 0),
                     std::nullopt};
  search.used[1] = 1;
  search.extend();
  return search.found;
}

std::vector<HamCycle> enumerate_hamilton(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) {
    throw std::invalid_argument("enumerate_hamilton: graph exceeds cap of " +
                                std::to_string(cap) + " vertices");
  }
  std::vector<HamCycle> out;
  if (n < 3) return out;
  std::vector<int> path{1};
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  used[1] = 1;
  collect_from(g, path, used, out);
  return out;
}

namespace {

void longest_from(const Graph& g, Edge e, std::vector<int>& path,
                  std::vector<char>& used, bool has_e,
                  std::vector<int>& best) {
  if (has_e && path.size() > best.size()) best = path;
  for (int w : g.neighbors(path.back())) {
    if (used[w]) continue;
    const bool step_is_e = make_edge(path.back(), w) == e;
    used[w] = 1;
    path.push_back(w);
    longest_from(g, e, path, used, has_e || step_is_e, best);
    path.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::vector<int> brute_longest_path_through(const Graph& g, Edge e) {
  std::vector<int> best;
  if (!g.has_edge(e.u, e.v)) return best;
  const int n = g.vertex_count();
  std::vector<char> used(static_cast<size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    std::vector<int> path{s};
    used[s] = 1;
    longest_from(g, e, path, used, false, best);
    used[s] = 0;
  }
  return best;
}

}  // namespace hamlab
