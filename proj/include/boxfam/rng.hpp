#pragma once

// Deterministic, platform-independent random generator: xoshiro256**
// (Blackman & Vigna) seeded through splitmix64. Streams are derived per
// (seed, stream index) so trials are independent and order-free.

#include <cstdint>

#include "boxfam/core_geometry.hpp"

namespace boxfam {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    SplitMix64 sm(seed ^ (stream * 0x9e3779b97f4a7c15ULL + 0x1234567d1ce4e5b9ULL * (stream != 0)));
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next_u64() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Unbiased uniform draw in [0, n), n >= 1, via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw DomainError("Rng::next_below: n must be positive");
    std::uint64_t rem = (0ULL - n) % n;  // 2^64 mod n
    while (true) {
      std::uint64_t u = next_u64();
      if (u >= rem) return u % n;
    }
  }

  /// Exact Bernoulli(num/den) draw. Requires 0 <= num <= den, den >= 1.
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num > den) throw DomainError("Rng::bernoulli: bad probability");
    if (num == den) return true;
    return next_below(den) < num;
  }

  /// Deterministic Fisher-Yates shuffle.
  template <typename Vec>
  void shuffle(Vec& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace boxfam
