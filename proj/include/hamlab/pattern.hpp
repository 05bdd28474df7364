#pragma once

#include <cstdint>
#include <optional>

#include "hamlab/coloring.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/ham_cycle.hpp"

namespace hamlab {

// A constrained Hamilton cycle search instance. A cycle presentation
// (y_0,...,y_{n-1}) satisfies it when edge {y_i, y_(i+1 mod n)} has color
// edge_pattern[i], vertex y_i has color vertex_pattern[i], and, if required,
// the n traversed edge colors are pairwise distinct. The presentation is
// free: any starting vertex and either direction may realize the patterns.
struct PatternProblem {
  Graph graph;
  std::optional<EdgeColoring> edge_colors;
  std::optional<VertexColoring> vertex_colors;
  std::optional<ColorPattern> edge_pattern;
  std::optional<ColorPattern> vertex_pattern;
  bool rainbow_required = false;
};

// Validates pattern lengths, palette coverage, and feasibility of the vertex
// pattern (its per-color counts must equal the class sizes). Throws on any
// violation; find_patterned repeats the check.
PatternProblem make_pattern_problem(Graph g,
                                    std::optional<EdgeColoring> edge_colors,
                                    std::optional<VertexColoring> vertex_colors,
                                    std::optional<ColorPattern> edge_pattern,
                                    std::optional<ColorPattern> vertex_pattern,
                                    bool rainbow_required = false);

// True iff some of the 2n presentations of h satisfies every constraint of
// prob. Independent of search bookkeeping, so solver outputs are re-checked
// against this.
bool pattern_matches(const PatternProblem& prob, const HamCycle& h);

bool check_rainbow(const HamCycle& h, const EdgeColoring& ec);

enum class SearchMode { Exact, Heuristic };

struct PatternSearchParams {
  int exact_cap = 14;
  std::uint64_t node_budget = 1'000'000;  // heuristic mode only
};

struct PatternSearchResult {
  std::optional<HamCycle> cycle;
  // Heuristic mode: true when the budget ran out, so absence is unproven.
  // Exact mode: always false, an empty result proves absence.
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

// Backtracking over cycle presentations with color pruning. Exact mode is a
// complete search (n capped); heuristic mode explores the same tree under a
// node budget, extending whichever path end has fewer feasible continuations.
PatternSearchResult find_patterned(const PatternProblem& prob, SearchMode mode,
                                   std::uint64_t seed,
                                   const PatternSearchParams& params = {});

}  // namespace hamlab
