#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/ham_cycle.hpp"

namespace hamlab {

struct RotationParams {
  // Total rotation states explored across the whole solve; 0 picks 50*n^2.
  std::uint64_t state_budget = 0;
  // How many reversed-endpoint closures to cache per stuck phase when
  // matching boosters whose endpoints both differ from the fixed one.
  int two_sided_limit = 64;
};

struct PosaStats {
  int longest_path = 0;
  int end_size = 0;           // endpoint count of the last forward closure
  int boosters_consumed = 0;  // sequence entries inspected (each at most once)
  int boosters_added = 0;     // entries that became working edges
  std::uint64_t states = 0;
  // Empty on success. Failure phases: "budget" (state budget exhausted),
  // "rot-saturated" (stuck with the booster sequence used up),
  // "reopen-stuck" (non-spanning cycle with no edge to the outside).
  std::string phase;
};

struct PosaResult {
  std::optional<HamCycle> cycle;
  PosaStats stats;
};

// Extension-rotation Hamilton cycle search. Grows a path greedily, explores
// restricted-rotation closures to extend it or close it into a cycle, spends
// boosters in sequence order to close otherwise-stuck paths, and reopens
// non-spanning cycles through an off-cycle neighbor. When required_edge is
// given it must be an edge of g; it is protected from every rotation and
// deletion, so a returned cycle always traverses it. Monte Carlo: failure on
// a Hamiltonian input is possible, a returned cycle is always valid in g
// plus the consumed boosters.
PosaResult posa_solve(const Graph& g, const std::vector<Edge>& boosters,
                      std::optional<Edge> required_edge,
                      const RotationParams& params, std::uint64_t seed);

}  // namespace hamlab
