#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// A simple path under restricted rotations. path.front() is the fixed
// endpoint; protected_edge, when present, lies on the path and no recorded
// rotation is allowed to break it. end_set accumulates every vertex that has
// occurred as the movable endpoint along this state's history.
struct RotationState {
  std::vector<int> path;
  std::optional<Edge> protected_edge;
  std::set<int> end_set;
  std::vector<Edge> transcript;

  int fixed_endpoint() const { return path.front(); }
  int movable_endpoint() const { return path.back(); }
};

RotationState make_rotation_state(std::vector<int> path,
                                  std::optional<Edge> protected_edge);

// Applies one restricted rotation. pivot = {x_k, x_i} where x_k is the
// movable endpoint and x_i sits at a 1-based position i with 1 < i < k-1.
// The path edge {x_i, x_(i+1)} is broken, so the pivot is rejected when that
// edge is the protected one. Whether pivot is an edge of the host graph is
// the caller's responsibility.
RotationState restricted_rotate(const RotationState& st, Edge pivot);

struct ClosureResult {
  std::vector<int> end_vertices;  // sorted
  bool complete = true;           // false when the state budget ran out
  std::uint64_t states = 0;       // distinct paths visited
};

// Exact set of movable endpoints over all paths obtainable from p0 by
// restricted rotations in g, with p0.front() fixed. States are distinguished
// by the full vertex sequence: two obtainable paths with the same endpoint
// can admit different further rotations, so endpoint-level deduplication
// would undercount.
ClosureResult end_set_closure(const Graph& g, const std::vector<int>& p0,
                              std::optional<Edge> e_star,
                              std::uint64_t state_budget = 2'000'000);

}  // namespace hamlab
