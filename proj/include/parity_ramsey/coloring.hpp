#pragma once

// The layered edge coloring psi = (c, Delta) of the complete graph on {0,1}^alpha.
//
//   eta_d(u, w)  first index i at which the level-d blocks of u and w differ,
//                together with the unordered pair of those two blocks
//   xi_d(v, w)   eta_d applied inside every level-(d+1) block
//   c(v, w)      (xi_2, xi_1, xi_0)
//   delta_i      sign of the comparison of the i-th level-2 blocks (v <= w)
//   psi(v, w)    (c, (delta_1, ..., delta_beta)) on the sorted pair

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parity_ramsey/errors.hpp"
#include "parity_ramsey/params.hpp"
#include "parity_ramsey/vertex.hpp"

namespace parity_ramsey {

// The i-th (1-based) consecutive sub-sequence of length r[d].
inline BitView block(BitView v, const Params& params, std::size_t d, std::size_t i) {
  if (d > 3) throw IndexError("level must be in 0..3");
  const std::size_t len = params.r[d];
  if (v.size() % len != 0) {
    throw ShapeError("length " + std::to_string(v.size()) + " is not divisible by r[" +
                     std::to_string(d) + "] = " + std::to_string(len));
  }
  const std::size_t count = v.size() / len;
  if (i < 1 || i > count) {
    throw IndexError("block index " + std::to_string(i) + " outside 1.." + std::to_string(count));
  }
  return v.subspan((i - 1) * len, len);
}

// The non-zero value of eta: the first differing block index and the two
// blocks, stored with low < high.
struct EtaPair {
  std::size_t index = 0;
  Bits low;
  Bits high;

  friend bool operator==(const EtaPair&, const EtaPair&) = default;
};

// Empty optional is the Zero value (equal inputs).
using EtaResult = std::optional<EtaPair>;

inline EtaResult eta(std::size_t d, BitView u, BitView w, const Params& params) {
  if (d > 2) throw IndexError("eta level must be in 0..2");
  const std::size_t len = params.r[d];
  if (u.size() != w.size()) throw ShapeError("eta: operands differ in length");
  if (u.size() % len != 0) throw ShapeError("eta: length not divisible by r[d]");
  for (std::size_t i = 0; i * len < u.size(); ++i) {
    BitView x = u.subspan(i * len, len);
    BitView y = w.subspan(i * len, len);
    const auto ord = compare_bits(x, y);
    if (ord == 0) continue;
    if (ord > 0) std::swap(x, y);
    return EtaPair{i + 1, Bits(x.begin(), x.end()), Bits(y.begin(), y.end())};
  }
  return std::nullopt;
}

inline std::vector<EtaResult> xi(std::size_t d, BitView v, BitView w, const Params& params) {
  if (d > 2) throw IndexError("xi level must be in 0..2");
  if (v.size() != params.alpha || w.size() != params.alpha) {
    throw ShapeError("xi: vertices must have length alpha");
  }
  const std::size_t count = params.a[d + 1];
  std::vector<EtaResult> out;
  out.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    out.push_back(eta(d, block(v, params, d + 1, j), block(w, params, d + 1, j), params));
  }
  return out;
}

// +1, 0, -1 as the i-th level-2 block of v is below, equal to, above that of w.
inline int delta(std::size_t i, const Vertex& v, const Vertex& w, const Params& params) {
  if (v > w) throw OrderingError("delta requires v <= w");
  if (v.size() != params.alpha || w.size() != params.alpha) {
    throw ShapeError("delta: vertices must have length alpha");
  }
  if (i < 1 || i > params.beta) throw IndexError("delta index outside 1..beta");
  const auto ord = compare_bits(block(v.bits(), params, 2, i), block(w.bits(), params, 2, i));
  if (ord < 0) return +1;
  if (ord > 0) return -1;
  return 0;
}

struct PsiColor {
  std::size_t beta = 0;
  EtaResult xi2;
  std::vector<EtaResult> xi1;  // a[2] = beta components
  std::vector<EtaResult> xi0;  // a[1] = beta^2 components
  std::vector<std::int8_t> delta_part;

  friend bool operator==(const PsiColor&, const PsiColor&) = default;
};

inline PsiColor psi(const Vertex& u, const Vertex& w, const Params& params) {
  if (u.size() != params.alpha || w.size() != params.alpha) {
    throw ShapeError("psi: vertices must have length " + std::to_string(params.alpha));
  }
  if (u == w) throw SelfLoopError("psi is undefined on a self-loop");
  const Vertex& lo = u < w ? u : w;
  const Vertex& hi = u < w ? w : u;
  PsiColor color;
  color.beta = params.beta;
  color.xi2 = xi(2, lo.bits(), hi.bits(), params).front();
  color.xi1 = xi(1, lo.bits(), hi.bits(), params);
  color.xi0 = xi(0, lo.bits(), hi.bits(), params);
  color.delta_part.reserve(params.beta);
  for (std::size_t i = 1; i <= params.beta; ++i) {
    color.delta_part.push_back(static_cast<std::int8_t>(delta(i, lo, hi, params)));
  }
  return color;
}

inline std::string to_string(const EtaResult& e) {
  if (!e) return "0";
  return "(" + std::to_string(e->index) + ",{" + bits_to_string(e->low) + "," +
         bits_to_string(e->high) + "})";
}

// Multi-line human-readable breakdown, used by the CLI.
inline std::string describe(const PsiColor& c) {
  std::ostringstream os;
  os << "xi2   = " << to_string(c.xi2) << "\n";
  os << "xi1   = (";
  for (std::size_t j = 0; j < c.xi1.size(); ++j) os << (j ? ", " : "") << to_string(c.xi1[j]);
  os << ")\n";
  os << "xi0   = (";
  for (std::size_t j = 0; j < c.xi0.size(); ++j) os << (j ? ", " : "") << to_string(c.xi0[j]);
  os << ")\n";
  os << "Delta = (";
  for (std::size_t j = 0; j < c.delta_part.size(); ++j) {
    const int s = c.delta_part[j];
    os << (j ? ", " : "") << (s > 0 ? "+1" : s < 0 ? "-1" : "0");
  }
  os << ")\n";
  return os.str();
}

}  // namespace parity_ramsey
