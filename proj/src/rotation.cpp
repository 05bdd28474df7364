#include "hamlab/rotation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hamlab {
namespace {

void check_simple_path(const Graph& g, const std::vector<int>& path) {
  if (path.empty()) throw std::invalid_argument("path is empty");
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("path repeats a vertex");
  }
  for (int v : path) {
    if (v < 1 || v > g.vertex_count()) {
      throw std::invalid_argument("path vertex out of range");
    }
  }
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      throw std::invalid_argument("path step is not an edge");
    }
  }
}

// Rotation on the raw sequence: pivot position i is 0-based, pointing at x_i
// with 1 <= i <= k-3. Breaks {path[i], path[i+1]}.
std::vector<int> rotate_at(const std::vector<int>& path, size_t i) {
  std::vector<int> out(path.begin(), path.begin() + i + 1);
  out.insert(out.end(), path.rbegin(), path.rend() - (i + 1));
  return out;
}

}  // namespace

RotationState make_rotation_state(std::vector<int> path,
                                  std::optional<Edge> protected_edge) {
  if (path.empty()) throw std::invalid_argument("path is empty");
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("path repeats a vertex");
  }
  if (protected_edge) {
    bool on_path = false;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (make_edge(path[i], path[i + 1]) == *protected_edge) on_path = true;
    }
    if (!on_path) {
      throw std::invalid_argument("protected edge is not on the path");
    }
  }
  RotationState st;
  st.end_set.insert(path.back());
  st.path = std::move(path);
  st.protected_edge = protected_edge;
  return st;
}

RotationState restricted_rotate(const RotationState& st, Edge pivot) {
  const auto& path = st.path;
  const size_t k = path.size();
  if (k < 4) throw std::invalid_argument("path too short to rotate");
  const int xk = path.back();
  int xi;
  if (pivot.u == xk) {
    xi = pivot.v;
  } else if (pivot.v == xk) {
    xi = pivot.u;
  } else {
    throw std::invalid_argument("pivot does not touch the movable endpoint");
  }
  auto it = std::find(path.begin(), path.end(), xi);
  if (it == path.end()) throw std::invalid_argument("pivot vertex not on path");
  const size_t i = static_cast<size_t>(it - path.begin());
  if (i < 1 || i > k - 3) {
    throw std::invalid_argument("pivot position admits no rotation");
  }
  const Edge broken = make_edge(path[i], path[i + 1]);
  if (st.protected_edge && broken == *st.protected_edge) {
    throw std::invalid_argument("rotation would break the protected edge");
  }
  RotationState out;
  out.path = rotate_at(path, i);
  out.protected_edge = st.protected_edge;
  out.end_set = st.end_set;
  out.end_set.insert(out.path.back());
  out.transcript = st.transcript;
  out.transcript.push_back(pivot);
  return out;
}

ClosureResult end_set_closure(const Graph& g, const std::vector<int>& p0,
                              std::optional<Edge> e_star,
                              std::uint64_t state_budget) {
  check_simple_path(g, p0);
  ClosureResult res;
  std::set<int> ends;
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(p0);
  queue.push_back(p0);
  ends.insert(p0.back());
  while (!queue.empty()) {
    if (res.states >= state_budget) {
      res.complete = false;
      break;
    }
    std::vector<int> path = std::move(queue.front());
    queue.pop_front();
    ++res.states;
    const size_t k = path.size();
    if (k < 4) continue;
    std::vector<size_t> pos_of(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (size_t i = 0; i < k; ++i) pos_of[path[i]] = i + 1;
    for (int w : g.neighbors(path.back())) {
      const size_t p = pos_of[w];
      if (p == 0) continue;  // off-path neighbors would extend, not rotate
      const size_t i = p - 1;
      if (i < 1 || i > k - 3) continue;
      if (e_star && make_edge(path[i], path[i + 1]) == *e_star) continue;
      std::vector<int> next = rotate_at(path, i);
      if (seen.insert(next).second) {
        ends.insert(next.back());
        queue.push_back(std::move(next));
      }
    }
  }
  res.end_vertices.assign(ends.begin(), ends.end());
  return res;
}

}  // namespace hamlab
