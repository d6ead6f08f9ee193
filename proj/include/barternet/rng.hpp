#pragma once

#include <cstdint>
#include <vector>

namespace barternet {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// engines/distributions so that seeded scenarios and sampled verification
/// runs are byte-identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Multiply-shift rejection (Lemire); unbiased and fully deterministic.
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = -n % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) {
      std::size_t j = static_cast<std::size_t>(below(k));
      std::swap(v[k - 1], v[j]);
    }
  }

  /// Mix an index into a fresh, statistically independent stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
    SplitMix64 g(seed ^ (0x6a09e667f3bcc909ULL + salt * 0x9e3779b97f4a7c15ULL));
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace barternet
