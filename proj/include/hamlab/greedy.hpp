#pragma once

// Low-inversion Hamilton cycles from a two-layer random graph. A
// deterministic walk on the first layer always moves to the
// smallest-labelled unvisited neighbor, so the visit order stays close to
// sorted and contributes few inversions. The walk stops once the unvisited
// set is small, and the second layer supplies a Hamilton path through the
// leftovers that reattaches to both walk ends, closing the cycle.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/ham_cycle.hpp"
#include "hamlab/posa.hpp"

namespace hamlab {

struct GreedyParams {
  // Walk stops when this many vertices remain unvisited; 0 walks until
  // covered or dead-ended. Negative picks round(2 ln n / p1) with a floor
  // of 4, clamped to n - 1, which needs lg.layer_probs[0] > 0.
  int u_target = -1;
  // Completion searches use brute force up to this many gadget vertices
  // and the rotation solver beyond.
  int brute_cap = 12;
  RotationParams rotation;
};

struct GreedyTranscript {
  std::vector<int> walk;       // v_1 = 1, .., v_j0
  std::vector<int> unvisited;  // ascending labels left when the walk stopped
  std::vector<long long> a;    // a[j-1] = unvisited labels below v_j at step j
  int j0 = 0;                  // walk length
  int j1 = 0;                  // min(unvisited), 0 when nothing is left
  bool stuck = false;          // walk dead-ended before reaching the target
  bool completed = false;
  std::string failure;         // set when completion fails
  // sum of a_j plus |U| * (n - j1): an a-priori bound on the inversion
  // count of any cycle assembled from this walk.
  long long walk_bound = 0;
};

struct GreedyResult {
  std::optional<HamCycle> cycle;
  GreedyTranscript transcript;
};

// p1 = frac * p and the p2 for which (1-p1)(1-p2) = 1-p.
std::pair<double, double> split_probability(double p, double frac);

// lg must have exactly two layers: walk edges first, completion edges
// second. The walk itself is deterministic; seed drives only the
// completion solver.
GreedyResult greedy_low_inversion(const LayeredGraph& lg,
                                  const GreedyParams& params,
                                  std::uint64_t seed);

}  // namespace hamlab
