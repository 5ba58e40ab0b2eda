#pragma once

#include <cstdint>

namespace ght {

// Kahan compensated accumulator. Alternating-sign sums over near-singular
// denominators lose digits under plain accumulation.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double term) {
    double y = term - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

// Deterministic 64-bit generator (splitmix64). Independent streams are
// derived from (seed, stream index) so parallel trials stay reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed);
    r.state_ ^= 0x9e3779b97f4a7c15ull * (index + 1);
    r.next_u64();
    return r;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }

  // Uniform integer in [lo, hi] inclusive.
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool next_bit() { return (next_u64() & 1ull) != 0; }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

}  // namespace ght
