#include "hamlab/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hamlab {
namespace {

long long merge_count(std::vector<int>& a, std::vector<int>& buf, size_t lo,
                      size_t hi) {
  if (hi - lo < 2) return 0;
  const size_t mid = lo + (hi - lo) / 2;
  long long inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      inv += static_cast<long long>(mid - i);
      buf[k++] = a[j++];
    } else {
      buf[k++] = a[i++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
  return inv;
}

void check_permutation(const std::vector<int>& perm) {
  const int n = int(perm.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = 1;
  }
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt int_pow(BigInt base, long long e) {
  BigInt r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

long long inversions(const std::vector<int>& seq) {
  std::vector<int> a = seq;
  std::vector<int> buf(a.size());
  return merge_count(a, buf, 0, a.size());
}

long long inversions(const HamCycle& h) { return inversions(h.seq); }

long long inversions_min_direction(const HamCycle& h) {
  const long long fwd = inversions(h.seq);
  std::vector<int> rev;
  rev.reserve(h.seq.size());
  rev.push_back(h.seq.front());
  rev.insert(rev.end(), h.seq.rbegin(), h.seq.rend() - 1);
  return std::min(fwd, inversions(rev));
}

LehmerCode lehmer_encode(const std::vector<int>& perm) {
  check_permutation(perm);
  const int n = int(perm.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  // Fenwick over positions of the values 1..k-1 already processed; the
  // entry for k counts how many of them sit to its right.
  std::vector<int> tree(n + 1, 0);
  auto add = [&](int i) {
    for (++i; i <= n; i += i & -i) ++tree[i];
  };
  auto prefix = [&](int i) {
    int s = 0;
    for (++i; i > 0; i -= i & -i) s += tree[i];
    return s;
  };
  LehmerCode code;
  code.mu.resize(n);
  for (int k = 1; k <= n; ++k) {
    code.mu[k - 1] = (k - 1) - prefix(pos[k]);
    add(pos[k]);
  }
  return code;
}

std::vector<int> lehmer_decode(const LehmerCode& code) {
  const int n = int(code.mu.size());
  std::vector<int> out;
  out.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const int mu = code.mu[k - 1];
    if (mu < 0 || mu >= k) {
      throw std::invalid_argument("code entry " + std::to_string(k) +
                                  " outside [0, " + std::to_string(k - 1) +
                                  "]");
    }
    out.insert(out.begin() + (k - 1 - mu), k);
  }
  return out;
}

BigInt count_inversion_bounded(int n, long long M) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (M < 0) throw std::invalid_argument("need M >= 0");
  const long long max_inv = (long long)n * (n - 1) / 2;
  const long long cap = std::min(M, max_inv);
  if (cap > 2'000'000) {
    throw std::invalid_argument("inversion budget too large for exact mode");
  }
  // f[m] = number of codes (mu_1..mu_j) with sum m; advancing j adds a
  // value in [0, j-1], a sliding-window sum handled with a running prefix.
  std::vector<BigInt> f(cap + 1, 0), pre(cap + 2, 0);
  f[0] = 1;
  for (int j = 2; j <= n; ++j) {
    pre[0] = 0;
    for (long long m = 0; m <= cap; ++m) pre[m + 1] = pre[m] + f[m];
    for (long long m = cap; m >= 0; --m) {
      const long long lo = std::max<long long>(0, m - (j - 1));
      f[m] = pre[m + 1] - pre[lo];
    }
  }
  BigInt total = 0;
  for (long long m = 0; m <= cap; ++m) total += f[m];
  return total;
}

double first_moment_bound(int n, long long M, double p) {
  if (n < 1 || M < 0) throw std::invalid_argument("need n >= 1, M >= 0");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0, 1]");
  if (p == 0.0) return 0.0;
  const double log_v = std::lgamma(double(M + n) + 1.0) -
                       std::lgamma(double(n) + 1.0) -
                       std::lgamma(double(M) + 1.0) + n * std::log(p);
  if (log_v >= 0.0) return 1.0;
  return std::exp(log_v);
}

double p_epsilon(int n, long long M, double eps) {
  if (n < 1 || M < 1) throw std::invalid_argument("need n >= 1, M >= 1");
  if (eps < 0.0 || eps >= 1.0) {
    throw std::invalid_argument("eps outside [0, 1)");
  }
  return (1.0 - eps) * n / (std::exp(1.0) * M);
}

BigInt restricted_class_size(int n, long long M) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (M < n) throw std::invalid_argument("need M >= n");
  const long long m = M / n;
  if (m >= n) return factorial(n);
  return factorial(int(m)) * int_pow(BigInt(m), n - m);
}

BigInt size_upper_S(int n, long long M, int s, int v2) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (M < n) throw std::invalid_argument("need M >= n");
  const long long m = std::min<long long>(M / n, n);
  if (s < 0 || v2 < 0 || v2 > s) {
    throw std::invalid_argument("need 0 <= v2 <= s");
  }
  if (v2 > m) throw std::invalid_argument("v2 exceeds floor(M/n)");
  const long long expo = n - m - s + v2;
  if (expo < 0) throw std::invalid_argument("set too large for the bound");
  return int_pow(BigInt(m), expo) * factorial(int(m - v2));
}

bool restricted_ratio_check(int n, long long M, int s, int v2) {
  size_upper_S(n, M, s, v2);  // validate the argument ranges
  // The ratio collapses to m^(s-v2) * m!/(m-v2)! with m = min(floor(M/n), n).
  const double m = double(std::min<long long>(M / n, n));
  const double log_ratio = (s - v2) * std::log(m) + std::lgamma(m + 1.0) -
                           std::lgamma(m - v2 + 1.0);
  const double target = s * (std::log(double(M) / n) - 1.0);
  return log_ratio >= target - 1e-9;
}

double fknp_threshold(double r, double kappa, double C) {
  if (r < 2.0) throw std::invalid_argument("need r >= 2");
  if (kappa <= 0.0) throw std::invalid_argument("need kappa > 0");
  if (C < 0.0) throw std::invalid_argument("need C >= 0");
  return std::min(1.0, C * std::log(r) / kappa);
}

}  // namespace hamlab
