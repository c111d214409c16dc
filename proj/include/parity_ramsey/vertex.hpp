#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parity_ramsey/errors.hpp"
#include "parity_ramsey/params.hpp"

namespace parity_ramsey {

using Bit = std::uint8_t;
using Bits = std::vector<Bit>;
using BitView = std::span<const Bit>;

inline std::string bits_to_string(BitView bits) {
  std::string s;
  s.reserve(bits.size());
  for (Bit b : bits) s.push_back(b ? '1' : '0');
  return s;
}

inline Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw ShapeError("bit string may only contain '0' and '1': \"" + std::string(text) + "\"");
    }
    out.push_back(ch == '1' ? 1 : 0);
  }
  return out;
}

// Lexicographic order, position 0 most significant.
inline std::strong_ordering compare_bits(BitView x, BitView y) {
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

// A point of {0,1}^alpha.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(Bits bits) : bits_(std::move(bits)) {}

  static Vertex parse(std::string_view text, const Params& params) {
    if (text.size() != params.alpha) {
      throw ShapeError("vertex must have exactly " + std::to_string(params.alpha) +
                       " bits, got " + std::to_string(text.size()));
    }
    return Vertex(bits_from_string(text));
  }

  // The alpha-bit big-endian representation of `value`.
  static Vertex from_index(std::uint64_t value, std::size_t alpha) {
    Bits b(alpha, 0);
    for (std::size_t k = 0; k < alpha && k < 64; ++k) {
      b[alpha - 1 - k] = static_cast<Bit>((value >> k) & 1U);
    }
    return Vertex(std::move(b));
  }

  BitView bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  std::string str() const { return bits_to_string(bits_); }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& x, const Vertex& y) {
    return compare_bits(x.bits_, y.bits_);
  }

 private:
  Bits bits_;
};

enum class VertexMode { LexFirst, SeededRandom };

// n distinct vertices of {0,1}^alpha, returned in lexicographic order.
// LexFirst gives the n smallest; SeededRandom draws uniformly without
// replacement from a std::mt19937_64 stream (raw 64-bit words, MSB first).
inline std::vector<Vertex> enumerate_vertices(const Params& params, std::uint64_t n,
                                              VertexMode mode, std::uint64_t seed = 0) {
  const std::size_t alpha = params.alpha;
  if (alpha < 64 && n > (std::uint64_t{1} << alpha)) {
    throw CapacityError("requested " + std::to_string(n) + " vertices but the universe has 2^" +
                        std::to_string(alpha));
  }
  std::vector<Vertex> out;
  out.reserve(n);
  if (mode == VertexMode::LexFirst) {
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(Vertex::from_index(i, alpha));
    return out;
  }
  std::mt19937_64 gen(seed);
  std::set<Vertex> seen;
  while (seen.size() < n) {
    Bits b(alpha, 0);
    for (std::size_t k = 0; k < alpha; k += 64) {
      const std::uint64_t word = gen();
      for (std::size_t j = 0; j < 64 && k + j < alpha; ++j) {
        b[k + j] = static_cast<Bit>((word >> (63 - j)) & 1U);
      }
    }
    seen.insert(Vertex(std::move(b)));
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace parity_ramsey
