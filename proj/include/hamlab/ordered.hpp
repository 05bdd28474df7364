#pragma once

// Hamilton cycles visiting a prescribed vertex sequence in order, built in
// four stages on a layered random graph: classify fragile vertices, thread
// each prescribed vertex onto a short anchor path with robust endpoints,
// join consecutive anchors with connectors routed through a pruned
// first-layer core, then contract the resulting super-path to a single
// protected edge and finish with the rotation solver, spending the last
// layer as boosters.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/ham_cycle.hpp"
#include "hamlab/posa.hpp"

namespace hamlab {

struct OrderedParams {
  // Density split exponent for synthesized layers: the third and fourth
  // layers get probability omega/(4n) each.
  double omega = 2.0;
  // Degree thresholds; negative picks 0.5*n*p1 (small, degree in the
  // union of the first two layers) and 0.125*n*p1 (tiny, first layer
  // alone).
  double theta_small = -1.0;
  double theta_tiny = -1.0;
  // Connector routing fails when the first-layer core drops below this
  // fraction of n.
  double core_floor_frac = 0.4;
  // Max connector edge count; 0 picks ceil(4 ln n / ln ln ln n), min 3.
  int diameter_budget = 0;
  // Interior-candidate trials per anchor side before giving up.
  int anchor_attempts = 10;
  RotationParams rotation;
};

struct VertexClassification {
  int n = 0;
  double theta_small = 0.0;
  double theta_tiny = 0.0;
  std::vector<char> small;  // degree in layers 1+2 at most theta_small
  std::vector<char> tiny;   // layer-1 degree at most theta_tiny; grows
  std::vector<char> avoid;  // small, neighbors of small, and tiny
  // Structural health of the sample, reported rather than assumed:
  // few small vertices, small vertices far apart, no short cycle
  // through a small vertex.
  bool small_count_ok = false;
  bool small_spacing_ok = false;
  bool small_girth_ok = false;

  int small_size() const;
  int tiny_size() const;
  int avoid_size() const;
};

struct SuperPath {
  std::vector<int> s0_order;
  std::vector<std::vector<int>> anchor_paths;  // oriented x_v .. v .. y_v
  std::vector<std::vector<int>> connectors;    // y_v .. x_{v+1}

  // Concatenation with the shared terminals deduplicated.
  std::vector<int> concat() const;
  int x_star() const;
  int y_star() const;
};

struct AnchorResult {
  bool ok = false;
  std::string error;
  std::vector<std::vector<int>> paths;
  std::vector<char> used;  // every vertex on some anchor path
};

struct ConnectorResult {
  bool ok = false;
  std::string error;
  std::vector<std::vector<int>> connectors;
  std::vector<int> lengths;  // edge counts
  int core_min = 0;          // smallest core size observed
};

struct Contraction {
  Graph graph;                    // survivors, relabeled 1..m
  std::optional<Edge> e_star;     // new labels; absent for a trivial path
  std::vector<int> to_old;        // new label -> old, to_old[0] unused
  std::vector<int> to_new;        // old label -> new, 0 when contracted away
  std::vector<int> p_star;        // the contracted path, old labels
};

struct OrderedReport {
  std::string stage;  // "done" or the stage that failed
  std::string detail;
  int small_size = 0;
  int tiny_size = 0;   // final, after connector pruning
  int avoid_size = 0;
  int pstar_len = 0;   // vertices on the super-path
  int core_min = 0;
  std::vector<int> connector_lengths;
  int boosters_used = 0;
  bool small_count_ok = false;
  bool small_spacing_ok = false;
  bool small_girth_ok = false;
};

struct OrderedResult {
  std::optional<HamCycle> cycle;
  OrderedReport report;
  std::optional<SuperPath> super_path;
};

VertexClassification classify(const LayeredGraph& lg,
                              const OrderedParams& params);

// One path per prescribed vertex, in order. A vertex outside tiny anchors
// as the trivial path (v); a tiny vertex gets a path of at most 6 edges
// through it whose endpoints leave tiny, avoiding fragile vertices, the
// other prescribed vertices, everything already used, and (after the
// first anchor) the neighbors of the super-path's eventual first endpoint.
AnchorResult build_anchor_paths(const LayeredGraph& lg,
                                const VertexClassification& cls,
                                const std::vector<int>& s0_order,
                                const OrderedParams& params);

// Connectors between consecutive anchor endpoints: second-layer hops into
// the maintained first-layer core, a shortest core path, and hops back
// out. Interiors are consumed and the core re-pruned after each one;
// grows cls.tiny/avoid accordingly.
ConnectorResult connect_paths(const LayeredGraph& lg,
                              VertexClassification& cls,
                              const AnchorResult& anchors,
                              const std::vector<int>& s0_order,
                              const OrderedParams& params);

// Removes the super-path's interior, keeps both endpoints, and joins them
// by the protected edge. A single-vertex path yields the identity
// contraction with no protected edge.
Contraction contract_superpath(const Graph& g, const SuperPath& sp);

// Rewrites a cycle of the contracted graph back to original labels,
// replacing the protected-edge traversal by the full super-path.
HamCycle expand_cycle(const Contraction& c, const HamCycle& h);

// True iff the cycle visits s0_order in cyclic order, not necessarily
// consecutively. Both traversal directions count unless strict.
bool validate_order(const HamCycle& h, const std::vector<int>& s0_order,
                    bool strict = false);

// Splits a plain graph into four layers whose union reproduces it
// exactly, matching the generative split at the graph's empirical
// density: layers 3 and 4 at omega/(4n), layers 1 and 2 equal.
LayeredGraph synthesize_layers(const Graph& g, const OrderedParams& params,
                               std::uint64_t seed);

OrderedResult solve_ordered(const LayeredGraph& lg,
                            const std::vector<int>& s0_order,
                            const OrderedParams& params, std::uint64_t seed);
OrderedResult solve_ordered(const Graph& g, const std::vector<int>& s0_order,
                            const OrderedParams& params, std::uint64_t seed);

}  // namespace hamlab
