#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "parity_ramsey/errors.hpp"

namespace parity_ramsey {

// C(n, k); throws on overflow of 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // r * num / i is exact at every step; divide first where possible.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t rr = r / g, ii = i / g;
    if (rr > std::numeric_limits<std::uint64_t>::max() / num) throw CapacityError("binomial overflow");
    r = rr * num / ii;
  }
  return r;
}

// The k-subset of {0..n-1} with lexicographic rank `rank`, ascending.
inline std::vector<std::uint32_t> unrank_combination(std::uint32_t n, std::uint32_t k,
                                                     std::uint64_t rank) {
  std::vector<std::uint32_t> out;
  out.reserve(k);
  std::uint32_t x = 0;
  for (std::uint32_t slot = 0; slot < k; ++slot) {
    for (;; ++x) {
      const std::uint64_t below = binomial(n - x - 1, k - slot - 1);
      if (rank < below) break;
      rank -= below;
    }
    out.push_back(x++);
  }
  return out;
}

// Advance to the next k-subset in lexicographic order; false after the last.
inline bool next_combination(std::span<std::uint32_t> c, std::uint32_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace parity_ramsey
