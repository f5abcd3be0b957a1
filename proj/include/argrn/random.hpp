#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace argrn {

inline constexpr std::uint64_t kDefaultSeed = 20220601;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable stream seed for (master, a, b); used to give every parallel work
// item its own generator independent of scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a = 0,
                                    std::uint64_t b = 0) noexcept {
  return mix64(mix64(mix64(master) ^ (a + 0x632be59bd9b4e019ULL)) ^ (b + 0x85157af5ULL));
}

// Seeded generator with platform-independent bounded draws. The standard
// distributions are implementation-defined, so they are avoided here to keep
// every artifact byte-reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  // Uniform integer in [lo, hi]. Counts as one logical draw.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    ++draws_;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  // Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
  }

  // Uniform real in [0, 1) with 53 random bits.
  double uniform_real() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace argrn
