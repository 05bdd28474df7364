#pragma once

#include <cstdint>
#include <vector>

#include "hamlab/coloring.hpp"
#include "hamlab/graph.hpp"

namespace hamlab {

// Exhaustive spread analysis of the family of vertex-patterned Hamilton
// cycles on the complete host K_n. Members of the family are edge sets; a
// candidate obstruction S is any nonempty subset of some member, which is
// exactly the edge-disjoint path unions (or a whole cycle) the family can
// contain.
struct SpreadReport {
  std::uint64_t h_size = 0;     // members of the family
  int pattern_stabilizer = 0;   // dihedral maps of [n] preserving the pattern
  bool h_size_check = false;    // h_size * stabilizer == prod class_sizes[j]!
  double kappa_hat = 0.0;       // min over S of (h_size / count(S))^(1/|S|)
  std::vector<Edge> worst_set;  // the minimizing S
  std::uint64_t worst_count = 0;
  int worst_size = 0;
  bool bound_check = false;     // count(S) <= h_size (2e / min class)^|S| always
  std::uint64_t sets_checked = 0;
  double kappa_floor = 0.0;     // (min class size) / (2e)
};

// vertex_colors assigns classes V_j; pattern prescribes the color of every
// cycle position. Requires pattern color counts equal to class sizes.
SpreadReport spread_ratio(const VertexColoring& vertex_colors,
                          const ColorPattern& pattern, int cap = 8);

}  // namespace hamlab
