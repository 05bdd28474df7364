#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/ham_cycle.hpp"

namespace hamlab {

// Exhaustive search from vertex 1 over neighbor lists in increasing order.
// Returns the first Hamilton cycle accepted by `constraint`, or nullopt when
// none exists. Throws when g has more than `cap` vertices.
std::optional<HamCycle> brute_hamilton(
    const Graph& g,
    const std::function<bool(const HamCycle&)>& constraint = nullptr,
    int cap = 12);

// All Hamilton cycle sequences anchored at vertex 1, in lexicographic order.
// The two traversal directions of one undirected cycle are listed separately,
// so K4 yields 6 sequences.
std::vector<HamCycle> enumerate_hamilton(const Graph& g, int cap = 10);

// Longest path of g that traverses edge e, found by trying every start
// vertex in increasing order. Empty when e is not an edge of g.
std::vector<int> brute_longest_path_through(const Graph& g, Edge e);

}  // namespace hamlab
