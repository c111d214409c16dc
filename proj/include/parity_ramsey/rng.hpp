#pragma once

#include <cstdint>
#include <limits>

namespace parity_ramsey {

// SplitMix64: used to derive independent per-draw streams from (seed, index)
// so sampled work can be split across threads without changing the output.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (stream * 0xD1B54A32D192ED03ULL));
  return g();
}

// Uniform integer in [0, bound) by rejection. std::uniform_int_distribution is
// implementation-defined, which would make seeded outputs platform-dependent.
template <class Gen>
std::uint64_t uniform_below(Gen& gen, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = static_cast<std::uint64_t>(gen());
    if (x < limit) return x % bound;
  }
}

}  // namespace parity_ramsey
