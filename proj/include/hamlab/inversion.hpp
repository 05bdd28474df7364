#pragma once

// Permutation inversion counting, the Lehmer-code bijection realized by
// value insertion, and the exact/analytic counting formulas for Hamilton
// cycles with few inversions.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "hamlab/ham_cycle.hpp"

namespace hamlab {

using BigInt = boost::multiprecision::cpp_int;

// Entry mu[k-1] counts the values smaller than k that appear after k,
// so 0 <= mu[k-1] < k and the entries sum to the inversion count.
struct LehmerCode {
  std::vector<int> mu;
};

// Number of pairs i < j with seq[i] > seq[j]. Merge-count, O(n log n).
long long inversions(const std::vector<int>& seq);
long long inversions(const HamCycle& h);

// A cycle has two sequence presentations rooted at vertex 1, one per
// direction, and their inversion counts generally differ. Solvers report
// the count of the direction they built; this is the min of the two.
long long inversions_min_direction(const HamCycle& h);

LehmerCode lehmer_encode(const std::vector<int>& perm);

// Builds the permutation by inserting values 1..n in order, placing k in
// front of mu[k-1] of the already placed (smaller) values.
std::vector<int> lehmer_decode(const LehmerCode& code);

// Number of permutations of [n] with at most M inversions, exact.
BigInt count_inversion_bounded(int n, long long M);

// min(1, C(M+n, n) * p^n), evaluated in log space.
double first_moment_bound(int n, long long M, double p);

// (1 - eps) * n / (e * M), the density below which cycles with at most M
// inversions stop appearing.
double p_epsilon(int n, long long M, double eps);

// Size of the restricted code class: with m = floor(M/n), codes obeying
// mu_j < j for j <= m and mu_j < m for j > m, which count m! * m^(n-m).
// For m >= n every code qualifies and the size is n!.
BigInt restricted_class_size(int n, long long M);

// Upper bound on the number of restricted-class cycles containing a fixed
// s-edge set whose left endpoints include v2 positions among the first m:
// m^(n-m-s+v2) * (m-v2)!.
BigInt size_upper_S(int n, long long M, int s, int v2);

// Checks in log space that class size / size_upper_S >= (M/(e n))^s.
bool restricted_ratio_check(int n, long long M, int s, int v2);

// C * ln(r) / kappa capped at 1: the density at which a kappa-spread
// family of r-element sets starts appearing.
double fknp_threshold(double r, double kappa, double C);

}  // namespace hamlab
