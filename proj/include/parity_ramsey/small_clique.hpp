#pragma once

// Edge-labelled complete graphs on K <= 5 vertices, as fixed-order label words.
// Edge order is lexicographic on pairs: for K5 that is ab ac ad ae bc bd be cd ce de.
// Every forbidden-shape test used by the verifier and the pattern classifier
// is a function of such a word alone.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace parity_ramsey::clique {

constexpr std::size_t edge_count(std::size_t k) { return k * (k - 1) / 2; }

template <std::size_t K>
using Word = std::array<std::uint8_t, edge_count(K)>;

template <std::size_t K>
using Perm = std::array<std::uint8_t, K>;

template <std::size_t K>
constexpr std::size_t edge_index(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  // Pairs (0,1),(0,2),...,(0,K-1),(1,2),...
  return u * (2 * K - u - 1) / 2 + (v - u - 1);
}

template <std::size_t K>
constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, edge_count(K)> edge_list() {
  std::array<std::pair<std::uint8_t, std::uint8_t>, edge_count(K)> out{};
  std::size_t e = 0;
  for (std::size_t u = 0; u < K; ++u)
    for (std::size_t v = u + 1; v < K; ++v)
      out[e++] = {static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)};
  return out;
}

template <std::size_t K>
const std::vector<Perm<K>>& all_perms() {
  static const std::vector<Perm<K>> perms = [] {
    std::vector<Perm<K>> out;
    Perm<K> p;
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// Relabel colors by first appearance along the edge order: 1, 2, 3, ...
template <std::size_t K, class T>
Word<K> normalize(std::span<const T, edge_count(K)> labels) {
  Word<K> out{};
  std::array<T, edge_count(K)> seen{};
  std::size_t used = 0;
  for (std::size_t e = 0; e < edge_count(K); ++e) {
    std::size_t k = 0;
    while (k < used && seen[k] != labels[e]) ++k;
    if (k == used) seen[used++] = labels[e];
    out[e] = static_cast<std::uint8_t>(k + 1);
  }
  return out;
}

template <std::size_t K>
Word<K> normalize(const Word<K>& w) {
  return normalize<K, std::uint8_t>(std::span<const std::uint8_t, edge_count(K)>(w));
}

// Vertex u of the input becomes vertex perm[u].
template <std::size_t K>
Word<K> permute(const Word<K>& w, const Perm<K>& perm) {
  static constexpr auto edges = edge_list<K>();
  Word<K> out{};
  for (std::size_t e = 0; e < edge_count(K); ++e) {
    out[edge_index<K>(perm[edges[e].first], perm[edges[e].second])] = w[e];
  }
  return out;
}

// Least normalized word over all K! relabelings of the vertices.
template <std::size_t K>
Word<K> canonical(const Word<K>& w) {
  Word<K> best = normalize<K>(w);
  for (const auto& p : all_perms<K>()) best = std::min(best, normalize<K>(permute<K>(w, p)));
  return best;
}

template <std::size_t K>
std::size_t color_count(const Word<K>& w) {
  std::vector<std::uint8_t> c(w.begin(), w.end());
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

// Color type: class sizes, sorted ascending.
template <std::size_t K>
std::vector<std::size_t> color_type(const Word<K>& w) {
  std::map<std::uint8_t, std::size_t> m;
  for (auto x : w) ++m[x];
  std::vector<std::size_t> out;
  for (const auto& [_, n] : m) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

template <std::size_t K>
bool all_even(const Word<K>& w) {
  for (std::size_t n : color_type<K>(w))
    if (n % 2) return false;
  return true;
}

inline bool is_type_222(const Word<4>& w) {
  return color_type<4>(w) == std::vector<std::size_t>{2, 2, 2};
}

// All three perfect matchings monochromatic, in three distinct colors.
inline bool is_striped(const Word<4>& w) {
  const auto ab = w[edge_index<4>(0, 1)], cd = w[edge_index<4>(2, 3)];
  const auto ac = w[edge_index<4>(0, 2)], bd = w[edge_index<4>(1, 3)];
  const auto ad = w[edge_index<4>(0, 3)], bc = w[edge_index<4>(1, 2)];
  return ab == cd && ac == bd && ad == bc && ab != ac && ab != ad && ac != ad;
}

template <std::size_t K>
bool has_mono_triangle(const Word<K>& w) {
  for (std::size_t a = 0; a < K; ++a)
    for (std::size_t b = a + 1; b < K; ++b)
      for (std::size_t c = b + 1; c < K; ++c) {
        const auto x = w[edge_index<K>(a, b)];
        if (x == w[edge_index<K>(a, c)] && x == w[edge_index<K>(b, c)]) return true;
      }
  return false;
}

// Some color class contains an odd cycle, i.e. is not bipartite.
template <std::size_t K>
bool has_mono_odd_cycle(const Word<K>& w) {
  static constexpr auto edges = edge_list<K>();
  for (auto color : w) {
    bool bipartite = false;
    for (unsigned sides = 0; sides < (1U << K) && !bipartite; ++sides) {
      bipartite = true;
      for (std::size_t e = 0; e < edges.size() && bipartite; ++e) {
        if (w[e] != color) continue;
        if (((sides >> edges[e].first) & 1U) == ((sides >> edges[e].second) & 1U)) bipartite = false;
      }
    }
    if (!bipartite) return true;
  }
  return false;
}

// One monochromatic 2-edge path: core plus its two roots (root_a < root_b).
struct MonoPath {
  std::uint8_t core;
  std::uint8_t root_a;
  std::uint8_t root_b;
};

// Monochromatic K_{1,2} copies inside the sub-clique on `verts`.
template <std::size_t K>
std::vector<MonoPath> mono_paths(const Word<K>& w, std::span<const std::uint8_t> verts) {
  std::vector<MonoPath> out;
  for (auto core : verts)
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        const auto x = verts[i], y = verts[j];
        if (x == core || y == core) continue;
        if (w[edge_index<K>(core, x)] == w[edge_index<K>(core, y)]) out.push_back({core, x, y});
      }
  return out;
}

template <std::size_t K>
std::vector<MonoPath> mono_paths(const Word<K>& w) {
  Perm<K> all;
  std::iota(all.begin(), all.end(), std::uint8_t{0});
  return mono_paths<K>(w, all);
}

// Matching vertex labelings (a,b,c,d,e) for the three forbidden K5 configurations:
//   1: ab=cd, ac=ad
//   2: ab=bc=cd, ac=ce=de
//   3: ab=ae=ce, ad=de=bc
// Entry k is the lexicographically first labeling matching configuration k+1.
inline std::array<std::optional<Perm<5>>, 3> forbidden_configs(const Word<5>& w) {
  std::array<std::optional<Perm<5>>, 3> hit;
  for (const auto& p : all_perms<5>()) {
    auto col = [&](int x, int y) { return w[edge_index<5>(p[x], p[y])]; };
    enum { a, b, c, d, e };
    if (!hit[0] && col(a, b) == col(c, d) && col(a, c) == col(a, d)) hit[0] = p;
    if (!hit[1] && col(a, b) == col(b, c) && col(b, c) == col(c, d) && col(a, c) == col(c, e) &&
        col(c, e) == col(d, e))
      hit[1] = p;
    if (!hit[2] && col(a, b) == col(a, e) && col(a, e) == col(c, e) && col(a, d) == col(d, e) &&
        col(d, e) == col(b, c))
      hit[2] = p;
    if (hit[0] && hit[1] && hit[2]) break;
  }
  return hit;
}

// Pack a normalized word into an integer key (labels <= 15).
template <std::size_t K>
std::uint64_t pack(const Word<K>& w) {
  std::uint64_t key = 0;
  for (auto x : w) key = (key << 4) | x;
  return key;
}

}  // namespace parity_ramsey::clique
