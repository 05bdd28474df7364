#include "hamlab/spread.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hamlab {
namespace {

int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace

SpreadReport spread_ratio(const VertexColoring& vertex_colors,
                          const ColorPattern& pattern, int cap) {
  const int n = vertex_colors.n();
  if (n > cap) {
    throw std::invalid_argument("spread analysis capped at " +
                                std::to_string(cap) + " vertices");
  }
  if (n < 3) throw std::invalid_argument("spread analysis needs n >= 3");
  if (int(pattern.size()) != n) {
    throw std::invalid_argument("pattern length differs from n");
  }
  const int k = int(vertex_colors.class_sizes.size());
  if (int(pattern.counts.size()) > k) {
    throw std::invalid_argument("pattern uses colors beyond the palette");
  }
  for (int j = 0; j < k; ++j) {
    const int want =
        j < int(pattern.counts.size()) ? pattern.counts[j] : 0;
    if (want != vertex_colors.class_sizes[j]) {
      throw std::invalid_argument(
          "pattern color counts differ from class sizes");
    }
  }

  std::vector<std::vector<int>> positions(k), verts(k);
  for (int i = 0; i < n; ++i) positions[pattern.at(i) - 1].push_back(i);
  for (int v = 1; v <= n; ++v) {
    verts[vertex_colors.color_of(v) - 1].push_back(v);
  }

  // Every pattern-respecting sequence is one permutation per color class;
  // distinct sequences can present the same cycle, so members are collected
  // as edge-set bitmasks over the lexicographic pair index.
  std::uint64_t sequences = 1;
  for (int j = 0; j < k; ++j) {
    for (int i = 2; i <= int(verts[j].size()); ++i) sequences *= i;
  }
  std::unordered_set<std::uint64_t> members;
  members.reserve(size_t(sequences) * 2);
  std::vector<std::vector<int>> perm = verts;
  std::vector<int> seq(n);
  while (true) {
    for (int j = 0; j < k; ++j) {
      for (size_t i = 0; i < perm[j].size(); ++i) {
        seq[positions[j][i]] = perm[j][i];
      }
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      mask |= std::uint64_t(1) << pair_index(n, seq[i], seq[(i + 1) % n]);
    }
    members.insert(mask);
    int j = 0;
    while (j < k && !std::next_permutation(perm[j].begin(), perm[j].end())) {
      ++j;
    }
    if (j == k) break;
  }

  SpreadReport rep;
  rep.h_size = members.size();

  // Dihedral maps of the position cycle that preserve the pattern. Each
  // member has exactly this many sequence presentations matching the
  // pattern, which the product identity below confirms.
  int stab = 0;
  for (int r = 0; r < n; ++r) {
    bool rot = true, refl = true;
    for (int i = 0; i < n; ++i) {
      if (pattern.at((i + r) % n) != pattern.at(i)) rot = false;
      if (pattern.at(((r - i) % n + n) % n) != pattern.at(i)) refl = false;
    }
    stab += int(rot) + int(refl);
  }
  rep.pattern_stabilizer = stab;
  rep.h_size_check = rep.h_size * std::uint64_t(stab) == sequences;

  std::unordered_map<std::uint64_t, std::uint32_t> counts;
  counts.reserve(members.size() * 64);
  for (std::uint64_t m : members) {
    for (std::uint64_t s = m; s != 0; s = (s - 1) & m) {
      ++counts[s];
    }
  }
  rep.sets_checked = counts.size();

  int min_class = n;
  for (int sz : vertex_colors.class_sizes) min_class = std::min(min_class, sz);
  rep.kappa_floor = min_class / (2.0 * std::exp(1.0));

  std::vector<std::uint64_t> sets;
  sets.reserve(counts.size());
  for (const auto& [s, c] : counts) sets.push_back(s);
  std::sort(sets.begin(), sets.end());

  const double log_h = std::log(double(rep.h_size));
  const double per_edge_slack = std::log(2.0) + 1.0 - std::log(double(min_class));
  bool bound_ok = true;
  double best = 0.0;
  bool have_best = false;
  for (std::uint64_t s : sets) {
    const std::uint32_t c = counts[s];
    const int size = popcount64(s);
    const double log_ratio = (log_h - std::log(double(c))) / size;
    if (!have_best || log_ratio < best) {
      have_best = true;
      best = log_ratio;
      rep.worst_count = c;
      rep.worst_size = size;
      rep.worst_set.clear();
      for (int b = 0; b < 64; ++b) {
        if (s >> b & 1) rep.worst_set.push_back(pair_from_index(n, b));
      }
    }
    if (std::log(double(c)) > log_h + size * per_edge_slack + 1e-9) {
      bound_ok = false;
    }
  }
  rep.kappa_hat = have_best ? std::exp(best) : 0.0;
  rep.bound_check = bound_ok;
  return rep;
}

}  // namespace hamlab
