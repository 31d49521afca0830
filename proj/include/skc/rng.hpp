#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace skc {

namespace detail {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Keyed counter stream: (seed, stream) fully determines the sequence, so
// per-trial streams can be drawn on any worker in any order and still
// reproduce bit-for-bit. Underlying generator is splitmix64 started from a
// double-mixed key.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream)
      : state_(detail::mix64(seed + detail::kSplitMixGamma) ^
               detail::mix64(stream + 0x6A09E667F3BCC909ull)) {}

  std::uint64_t next() {
    state_ += detail::kSplitMixGamma;
    return detail::mix64(state_);
  }

  // Uniform in [0, bound) by rejection; no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t min = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= min) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Unbiased Fisher-Yates.
template <class T>
void shuffle(std::vector<T>& v, RandomStream& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace skc
