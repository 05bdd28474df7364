#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// A Hamilton cycle as a vertex sequence. Canonical form starts at vertex 1;
// the closing edge back to seq.front() is implicit. Cycles need n >= 3.
struct HamCycle {
  std::vector<int> seq;
};

// Rotates the sequence so vertex 1 comes first. Throws if 1 is absent or the
// sequence repeats a vertex.
HamCycle make_ham_cycle(std::vector<int> seq);

// True iff h visits each of 1..n exactly once, starts at 1, every consecutive
// pair (including the wrap-around) is an edge of g, and, when given, the
// required edge appears among the traversed pairs.
bool validate_cycle(const Graph& g, const HamCycle& h,
                    const std::optional<Edge>& required = std::nullopt);

std::string cycle_to_line(const HamCycle& h);

}  // namespace hamlab
