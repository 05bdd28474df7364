#pragma once

// Partially colored random graphs interpolating between plain G(n,p) and a
// fully colored model whose edges appear at a boosted rate. The first t
// vertex pairs in lexicographic order are "committed": each is present
// independently with probability beta*p and, when present, carries a color
// drawn from a fixed distribution. Pairs after the t-th are present with
// probability p and stay uncolored. A sample succeeds when some Hamilton
// cycle presentation matches the edge pattern on every colored edge it
// uses; uncolored edges match any pattern slot.

#include <cstdint>
#include <optional>
#include <vector>

#include "hamlab/coloring.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/rng.hpp"
#include "hamlab/sweep.hpp"

namespace hamlab {

struct CoupledSample {
  Graph graph;
  EdgeColoring colors;  // only committed present pairs carry a color
};

// Draws one graph from the interpolated model. alpha is normalized
// internally; t counts committed pairs and must lie in [0, n*(n-1)/2].
CoupledSample sample_coupled(int n, double p, double beta,
                             const std::vector<double>& alpha, long long t,
                             Rng& rng);

// Complete search over the 2n pattern alignments for a Hamilton cycle
// agreeing with the pattern wherever its edges are colored.
bool proper_cycle_exists(const Graph& g, const EdgeColoring& colors,
                         const ColorPattern& pattern, int cap = 10);

// Estimates the success probability at each t in t_grid. Rows report the
// point t, the hit rate with its standard error, and the mean edge count
// of the sampled graphs in the stat column. The success event is monotone
// in t when beta*p >= p, which the estimates reflect up to noise.
SweepResult coupling_monotonicity(int n, double p, double beta,
                                  const std::vector<double>& alpha,
                                  const ColorPattern& pattern,
                                  const std::vector<long long>& t_grid,
                                  int trials, std::uint64_t seed,
                                  int cap = 10);

}  // namespace hamlab
