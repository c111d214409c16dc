#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parity_ramsey/color_codec.hpp"
#include "parity_ramsey/errors.hpp"
#include "parity_ramsey/vertex.hpp"

namespace parity_ramsey {

using ColorId = std::uint32_t;

// A coloring oracle on n vertices, materialized: dense color ids per unordered
// pair plus the encoded byte string of each id. Ids are assigned by first
// appearance along the lexicographic edge order, so equal bytes <=> equal id
// and construction is deterministic. Read-only after construction.
class ColorMatrix {
 public:
  ColorMatrix() = default;

  // `oracle(u, w)` with u < w returns the encoded color of edge {u, w}.
  template <class Oracle>
  static ColorMatrix from_oracle(std::size_t n, Oracle&& oracle) {
    ColorMatrix m(n);
    std::unordered_map<ColorBytes, ColorId> ids;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w = u + 1; w < n; ++w) {
        ColorBytes bytes = oracle(u, w);
        auto [it, fresh] = ids.emplace(bytes, static_cast<ColorId>(m.names_.size()));
        if (fresh) m.names_.push_back(std::move(bytes));
        m.set(u, w, it->second);
      }
    }
    return m;
  }

  // Colors given as small integers; bytes are the 4-byte big-endian id.
  static ColorMatrix from_labels(std::size_t n, const std::vector<std::uint32_t>& edge_labels) {
    if (edge_labels.size() != n * (n - 1) / 2) throw ShapeError("from_labels: wrong edge count");
    std::size_t e = 0;
    return from_oracle(n, [&](std::size_t, std::size_t) {
      const std::uint32_t c = edge_labels[e++];
      std::string b(4, '\0');
      for (int k = 0; k < 4; ++k) b[k] = static_cast<char>((c >> (24 - 8 * k)) & 0xFF);
      return b;
    });
  }

  std::size_t size() const { return n_; }
  std::size_t color_count() const { return names_.size(); }

  ColorId id(std::size_t u, std::size_t w) const { return cells_[u * n_ + w]; }
  const ColorBytes& bytes(ColorId c) const { return names_[c]; }
  const ColorBytes& bytes(std::size_t u, std::size_t w) const { return names_[id(u, w)]; }

  // Fault injection: every edge colored `from` is recolored `to`.
  void remap(ColorId from, ColorId to) {
    for (auto& c : cells_)
      if (c == from) c = to;
  }

 private:
  explicit ColorMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  void set(std::size_t u, std::size_t w, ColorId c) {
    cells_[u * n_ + w] = c;
    cells_[w * n_ + u] = c;
  }

  std::size_t n_ = 0;
  std::vector<ColorId> cells_;
  std::vector<ColorBytes> names_;
};

inline ColorMatrix psi_matrix(const Params& params, const std::vector<Vertex>& vertices) {
  return ColorMatrix::from_oracle(vertices.size(), [&](std::size_t u, std::size_t w) {
    return encode_color(psi(vertices[u], vertices[w], params));
  });
}

}  // namespace parity_ramsey
