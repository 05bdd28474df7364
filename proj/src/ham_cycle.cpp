#include "hamlab/ham_cycle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hamlab {

HamCycle make_ham_cycle(std::vector<int> seq) {
  auto it = std::find(seq.begin(), seq.end(), 1);
  if (it == seq.end()) {
    throw std::invalid_argument("cycle sequence must contain vertex 1");
  }
  std::rotate(seq.begin(), it, seq.end());
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle sequence repeats a vertex");
  }
  return HamCycle{std::move(seq)};
}

bool validate_cycle(const Graph& g, const HamCycle& h,
                    const std::optional<Edge>& required) {
  const int n = g.vertex_count();
  if (n < 3) return false;
  if (static_cast<int>(h.seq.size()) != n) return false;
  if (h.seq.front() != 1) return false;

  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : h.seq) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  bool traversed_required = !required.has_value();
  for (int i = 0; i < n; ++i) {
    const int u = h.seq[i];
    const int v = h.seq[(i + 1) % n];
    if (!g.has_edge(u, v)) return false;
    if (required && make_edge(u, v) == *required) traversed_required = true;
  }
  return traversed_required;
}

std::string cycle_to_line(const HamCycle& h) {
  std::ostringstream out;
  for (size_t i = 0; i < h.seq.size(); ++i) {
    if (i) out << ' ';
    out << h.seq[i];
  }
  return out.str();
}

}  // namespace hamlab
