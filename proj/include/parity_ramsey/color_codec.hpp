#pragma once

// Canonical byte encoding of PsiColor.
//
//   [payload length : u32]
//   payload = [beta : u16] [xi2] [xi1 x beta] [xi0 x beta^2] [delta, 2 bits/symbol]
//   EtaResult = [tag : u8]            tag 0 = Zero
//             | [1][index : u16][low block][high block]
//   block     = [bit length : u16][bits packed MSB-first, zero padded]
//   delta symbol: 00 = 0, 01 = +1, 10 = -1, packed MSB-first, zero padded
//
// All integers are big-endian. Blocks inside a pair are stored low < high,
// so equal colors always produce equal bytes.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parity_ramsey/coloring.hpp"
#include "parity_ramsey/errors.hpp"

namespace parity_ramsey {

using ColorBytes = std::string;

namespace detail {

inline void put_u16(std::string& out, std::size_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

inline void put_bits(std::string& out, BitView bits) {
  put_u16(out, bits.size());
  std::uint8_t acc = 0;
  std::size_t fill = 0;
  for (Bit b : bits) {
    acc = static_cast<std::uint8_t>((acc << 1) | (b & 1U));
    if (++fill == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      fill = 0;
    }
  }
  if (fill) out.push_back(static_cast<char>(acc << (8 - fill)));
}

inline void put_eta(std::string& out, const EtaResult& e) {
  if (!e) {
    out.push_back(0);
    return;
  }
  out.push_back(1);
  put_u16(out, e->index);
  put_bits(out, e->low);
  put_bits(out, e->high);
}

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::size_t u16() {
    const std::size_t hi = u8();
    return (hi << 8) | u8();
  }
  std::size_t u32() {
    const std::size_t hi = u16();
    return (hi << 16) | u16();
  }
  Bits bits() {
    const std::size_t len = u16();
    need((len + 7) / 8);
    Bits out(len);
    for (std::size_t k = 0; k < len; ++k) {
      const auto byte = static_cast<std::uint8_t>(data_[pos_ + k / 8]);
      out[k] = static_cast<Bit>((byte >> (7 - k % 8)) & 1U);
    }
    pos_ += (len + 7) / 8;
    return out;
  }
  EtaResult eta() {
    const std::uint8_t tag = u8();
    if (tag == 0) return std::nullopt;
    if (tag != 1) throw ShapeError("color decode: bad EtaResult tag");
    EtaPair p;
    p.index = u16();
    p.low = bits();
    p.high = bits();
    return p;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t k) const {
    if (pos_ + k > data_.size()) throw ShapeError("color decode: truncated input");
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ColorBytes encode_color(const PsiColor& c) {
  std::string payload;
  detail::put_u16(payload, c.beta);
  detail::put_eta(payload, c.xi2);
  for (const auto& e : c.xi1) detail::put_eta(payload, e);
  for (const auto& e : c.xi0) detail::put_eta(payload, e);
  std::uint8_t acc = 0;
  std::size_t fill = 0;
  for (std::int8_t s : c.delta_part) {
    const std::uint8_t sym = s > 0 ? 0b01 : s < 0 ? 0b10 : 0b00;
    acc = static_cast<std::uint8_t>((acc << 2) | sym);
    if (++fill == 4) {
      payload.push_back(static_cast<char>(acc));
      acc = 0;
      fill = 0;
    }
  }
  if (fill) payload.push_back(static_cast<char>(acc << (2 * (4 - fill))));

  std::string out;
  out.reserve(payload.size() + 4);
  detail::put_u16(out, payload.size() >> 16);
  detail::put_u16(out, payload.size() & 0xFFFF);
  out += payload;
  return out;
}

inline PsiColor decode_color(std::string_view bytes) {
  detail::Reader rd(bytes);
  const std::size_t len = rd.u32();
  if (len + 4 != bytes.size()) throw ShapeError("color decode: length prefix mismatch");
  PsiColor c;
  c.beta = rd.u16();
  if (c.beta < 2) throw ShapeError("color decode: beta < 2");
  c.xi2 = rd.eta();
  for (std::size_t j = 0; j < c.beta; ++j) c.xi1.push_back(rd.eta());
  for (std::size_t j = 0; j < c.beta * c.beta; ++j) c.xi0.push_back(rd.eta());
  std::uint8_t byte = 0;
  for (std::size_t j = 0; j < c.beta; ++j) {
    if (j % 4 == 0) byte = rd.u8();
    const unsigned sym = (byte >> (6 - 2 * (j % 4))) & 0b11U;
    if (sym == 0b11) throw ShapeError("color decode: bad delta symbol");
    c.delta_part.push_back(static_cast<std::int8_t>(sym == 0b01 ? 1 : sym == 0b10 ? -1 : 0));
  }
  if (!rd.done()) throw ShapeError("color decode: trailing bytes");
  return c;
}

inline std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (char ch : bytes) {
    const auto b = static_cast<std::uint8_t>(ch);
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

struct ColorCount {
  std::size_t colors = 0;
  std::size_t delta_parts = 0;
};

// Distinct psi colors and distinct Delta parts over all edges of `vertices`.
inline ColorCount count_colors(const Params& params, const std::vector<Vertex>& vertices) {
  std::set<ColorBytes> colors;
  std::set<std::vector<std::int8_t>> deltas;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      PsiColor c = psi(vertices[i], vertices[j], params);
      colors.insert(encode_color(c));
      deltas.insert(std::move(c.delta_part));
    }
  }
  std::size_t bound = 1;
  for (std::size_t i = 0; i < params.beta && bound < (std::size_t{1} << 40); ++i) bound *= 3;
  if (deltas.size() > bound) {
    throw std::logic_error("Delta part count exceeds 3^beta");
  }
  return {colors.size(), deltas.size()};
}

}  // namespace parity_ramsey
