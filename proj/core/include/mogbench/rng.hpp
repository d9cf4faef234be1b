#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mogbench {

/// splitmix64 finalizer. Used to decorrelate derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent seed for a sub-stream (trial, round, planner, ...)
/// of a master-seeded run. Same inputs, same seed, on every platform.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t salt = 0) {
  return mix64(mix64(master ^ mix64(stream)) ^ mix64(salt + 0x5bd1e995ULL));
}

/// Deterministic generator with portable draw semantics. The standard
/// distributions are implementation-defined, so uniform draws are done by
/// hand on top of mt19937_64 (whose output sequence the standard pins down).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0. Unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t bound = n == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > bound);
    return x % n;
  }

  /// Fisher-Yates shuffle. std::shuffle's draw pattern is unspecified, so
  /// reproducible code cannot use it.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mogbench
