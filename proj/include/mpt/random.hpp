#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mpt {

// Seeded stream used by every generator and heuristic. std::mt19937_64 has a
// fully specified output sequence, so instances reproduce across platforms.
// Only raw 64-bit outputs are consumed; std distributions are avoided because
// their algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Fair coin: the top bit of the next output.
  bool coin() { return (engine_() >> 63) != 0; }

  // Uniform integer in [0, bound), bound > 0, by rejection from the top of
  // the 64-bit range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Fisher-Yates, last position first.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpt
