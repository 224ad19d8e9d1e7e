#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace qg {

// Seeded random stream with reproducible child derivation.
//
// The engine is std::mt19937_64, whose output sequence is pinned by the
// standard, and the Gaussian transform is the Marsaglia polar method coded
// here, so a given seed yields the same draws on every platform.
//
// Child streams are derived with the splitmix64 finalizer applied to
// seed ^ (index+1)*0x9E3779B97F4A7C15; distinct indices give streams that
// behave independently.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  RandomStream child(std::uint64_t index) const {
    return RandomStream(mix64(seed_ ^ ((index + 1) * 0x9E3779B97F4A7C15ULL)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo,hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Index uniform on {0,...,m-1} via rejection, unbiased.
  std::uint64_t uniform_index(std::uint64_t m) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % m;
  }

  // Standard normal via the polar (rejection) method; one spare cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  static std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qg
