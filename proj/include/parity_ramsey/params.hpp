#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "parity_ramsey/errors.hpp"

namespace parity_ramsey {

// Arithmetic frame of the layered coloring: vectors of length alpha = beta^3
// split at level d into a[d] blocks of length r[d] = beta^d.
struct Params {
  std::size_t beta = 0;
  std::size_t alpha = 0;
  std::array<std::size_t, 4> r{};
  std::array<std::size_t, 4> a{};

  friend bool operator==(const Params&, const Params&) = default;
};

inline Params derive_params(std::size_t beta) {
  if (beta < 2) {
    throw InvalidParameter("beta must be >= 2, got " + std::to_string(beta));
  }
  // beta^3 bits per vertex; anything past 2^16 would not fit the u16 index fields.
  if (beta > 40) {
    throw InvalidParameter("beta too large for the color encoding: " + std::to_string(beta));
  }
  Params p;
  p.beta = beta;
  std::size_t pow = 1;
  for (std::size_t d = 0; d < 4; ++d) {
    p.r[d] = pow;
    pow *= beta;
  }
  p.alpha = p.r[3];
  for (std::size_t d = 0; d < 4; ++d) p.a[d] = p.r[3 - d];
  return p;
}

}  // namespace parity_ramsey
