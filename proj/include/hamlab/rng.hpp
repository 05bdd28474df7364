#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace hamlab {

// Counter-based seeded generator (splitmix64 core, stream layout "hamlab-rng-v1").
// A stream is derived as mix(master ^ version) ^ purpose-tag ^ trial-index, so
// independent trials can draw in any order, on any worker, and still reproduce.
class Rng {
 public:
  explicit Rng(uint64_t raw_state) : state_(raw_state) {}

  Rng(uint64_t master, std::string_view purpose, uint64_t trial = 0)
      : state_(derive_stream(master, purpose, trial)) {}

  static uint64_t derive_stream(uint64_t master, std::string_view purpose,
                                uint64_t trial = 0) {
    uint64_t h = mix(master ^ kVersionTag);
    h = mix(h ^ fnv1a(purpose));
    h = mix(h ^ (trial + 0x9e3779b97f4a7c15ULL));
    return h;
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0,1), 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform in [0, bound). Rejection over a power-of-two mask keeps it unbiased.
  uint64_t uniform_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    uint64_t r;
    do {
      r = next_u64() & mask;
    } while (r >= bound);
    return r;
  }

  // Inclusive range.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    return lo + int(uniform_below(uint64_t(hi) - uint64_t(lo) + 1));
  }

  // Weights must be positive; they are treated as already normalized.
  // Returns a 0-based index.
  int categorical(const std::vector<double>& weights) {
    if (weights.empty()) throw std::invalid_argument("categorical: no weights");
    double x = next_double();
    double acc = 0.0;
    for (size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (x < acc) return int(i);
    }
    return int(weights.size()) - 1;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = size_t(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr uint64_t kVersionTag = 0x68616d6c61623031ULL;  // "hamlab01"

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  static uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= uint8_t(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  uint64_t state_;
};

}  // namespace hamlab
