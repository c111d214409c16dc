#pragma once

// Graph codes from colorings: graphs on [n] grouped by the parity of their
// intersection with every color class. Two members of one class differ by a
// graph meeting every color class evenly, so a coloring with no parity-even
// K_k turns each class into a K_k-code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "parity_ramsey/color_matrix.hpp"
#include "parity_ramsey/combinatorics.hpp"
#include "parity_ramsey/errors.hpp"

namespace parity_ramsey {

inline constexpr std::size_t max_code_vertices = 7;

// A graph on [n] as a bitmask over the C(n,2) edge slots in lexicographic order.
struct SmallGraph {
  std::size_t n = 0;
  std::uint32_t edges = 0;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

inline std::size_t slot_count(std::size_t n) { return n * (n - 1) / 2; }

inline std::size_t edge_slot(std::size_t n, std::size_t u, std::size_t w) {
  if (u > w) std::swap(u, w);
  return u * (2 * n - u - 1) / 2 + (w - u - 1);
}

// Edge set of the clique on `verts`.
inline std::uint32_t clique_mask(std::size_t n, std::span<const std::uint32_t> verts) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) mask |= 1U << edge_slot(n, verts[i], verts[j]);
  return mask;
}

inline std::vector<std::uint32_t> all_clique_masks(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  if (k > n) return out;
  auto s = unrank_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k), 0);
  do out.push_back(clique_mask(n, s));
  while (next_combination(s, static_cast<std::uint32_t>(n)));
  return out;
}

// Membership set over all 2^C(n,2) graphs.
class GraphBitmap {
 public:
  explicit GraphBitmap(std::size_t n = 0) : n_(n), words_(((std::uint64_t{1} << slot_count(n)) + 63) / 64, 0) {}

  std::size_t n() const { return n_; }
  std::uint64_t universe() const { return std::uint64_t{1} << slot_count(n_); }
  bool contains(std::uint32_t g) const { return (words_[g >> 6] >> (g & 63)) & 1U; }
  void insert(std::uint32_t g) { words_[g >> 6] |= std::uint64_t{1} << (g & 63); }
  void erase(std::uint32_t g) { words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63)); }

  std::uint64_t size() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::uint64_t g = 0; g < universe(); ++g)
      if (contains(static_cast<std::uint32_t>(g))) out.push_back(static_cast<std::uint32_t>(g));
    return out;
  }

  // 8-byte header (n, C(n,2) as little-endian u32), then one bit per graph
  // index, least significant bit first within each byte.
  void write(std::ostream& out) const {
    auto put32 = [&](std::uint32_t v) {
      for (int k = 0; k < 4; ++k) out.put(static_cast<char>((v >> (8 * k)) & 0xFF));
    };
    put32(static_cast<std::uint32_t>(n_));
    put32(static_cast<std::uint32_t>(slot_count(n_)));
    const std::uint64_t bytes = (universe() + 7) / 8;
    for (std::uint64_t b = 0; b < bytes; ++b) out.put(static_cast<char>((words_[b / 8] >> (8 * (b % 8))) & 0xFF));
  }

  static GraphBitmap read(std::istream& in) {
    auto get32 = [&] {
      std::uint32_t v = 0;
      for (int k = 0; k < 4; ++k) {
        const int ch = in.get();
        if (ch == EOF) throw ShapeError("bitmap: truncated header");
        v |= static_cast<std::uint32_t>(ch & 0xFF) << (8 * k);
      }
      return v;
    };
    const std::uint32_t n = get32();
    const std::uint32_t slots = get32();
    if (n > max_code_vertices || slots != slot_count(n)) throw ShapeError("bitmap: bad header");
    GraphBitmap bm(n);
    const std::uint64_t bytes = (bm.universe() + 7) / 8;
    for (std::uint64_t b = 0; b < bytes; ++b) {
      const int ch = in.get();
      if (ch == EOF) throw ShapeError("bitmap: truncated body");
      bm.words_[b / 8] |= static_cast<std::uint64_t>(ch & 0xFF) << (8 * (b % 8));
    }
    return bm;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct CodeReport {
  std::size_t n = 0;
  std::size_t color_count = 0;
  std::vector<ColorBytes> colors;  // parity-vector coordinate k is colors[k]
  // parity vector (bit k = odd intersection with colors[k]) -> class size
  std::map<std::uint32_t, std::uint64_t> class_sizes;
  std::uint32_t chosen_signature = 0;
  std::uint64_t chosen_class_size = 0;
  std::uint64_t total_graphs = 0;

  double density() const { return static_cast<double>(chosen_class_size) / static_cast<double>(total_graphs); }
};

struct ParityClasses {
  CodeReport report;
  GraphBitmap largest;
  std::vector<std::uint32_t> edge_signature;  // per edge slot: 1 << color coordinate
};

inline std::uint32_t graph_signature(std::uint32_t g, const std::vector<std::uint32_t>& edge_signature) {
  std::uint32_t sig = 0;
  while (g) {
    sig ^= edge_signature[static_cast<std::size_t>(std::countr_zero(g))];
    g &= g - 1;
  }
  return sig;
}

// Support-size-then-lexicographic order on parity vectors, used to break
// ties between equally large classes.
inline bool signature_before(std::uint32_t a, std::uint32_t b) {
  if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
  while (a && b) {
    const int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

// Groups all graphs on the first n vertices of `coloring` by parity vector.
inline ParityClasses build_parity_classes(std::size_t n, const ColorMatrix& coloring, unsigned jobs = 1) {
  if (n > max_code_vertices) {
    throw CapacityError("graph codes support n <= 7 (2^21 graphs), got " + std::to_string(n));
  }
  if (coloring.size() < n) throw ShapeError("coloring has fewer than n vertices");
  ParityClasses out;
  auto& rep = out.report;
  rep.n = n;
  rep.total_graphs = std::uint64_t{1} << slot_count(n);

  std::map<ColorId, std::uint32_t> coord;
  out.edge_signature.resize(slot_count(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w) {
      const ColorId c = coloring.id(u, w);
      auto [it, fresh] = coord.emplace(c, static_cast<std::uint32_t>(rep.colors.size()));
      if (fresh) rep.colors.push_back(coloring.bytes(c));
      out.edge_signature[edge_slot(n, u, w)] = 1U << it->second;
    }
  rep.color_count = rep.colors.size();

  const unsigned workers = std::max(1U, jobs);
  std::vector<std::map<std::uint32_t, std::uint64_t>> partial(workers);
  auto count_range = [&](unsigned j) {
    const std::uint64_t lo = rep.total_graphs * j / workers, hi = rep.total_graphs * (j + 1) / workers;
    for (std::uint64_t g = lo; g < hi; ++g)
      ++partial[j][graph_signature(static_cast<std::uint32_t>(g), out.edge_signature)];
  };
  if (workers == 1) {
    count_range(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < workers; ++j) pool.emplace_back(count_range, j);
    for (auto& th : pool) th.join();
  }
  for (const auto& part : partial)
    for (const auto& [sig, c] : part) rep.class_sizes[sig] += c;

  bool first = true;
  for (const auto& [sig, c] : rep.class_sizes) {
    if (first || c > rep.chosen_class_size ||
        (c == rep.chosen_class_size && signature_before(sig, rep.chosen_signature))) {
      rep.chosen_signature = sig;
      rep.chosen_class_size = c;
      first = false;
    }
  }

  out.largest = GraphBitmap(n);
  for (std::uint64_t g = 0; g < rep.total_graphs; ++g)
    if (graph_signature(static_cast<std::uint32_t>(g), out.edge_signature) == rep.chosen_signature)
      out.largest.insert(static_cast<std::uint32_t>(g));
  return out;
}

// Two members whose symmetric difference is the clique `clique`.
struct CodeViolation {
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  std::uint32_t clique = 0;

  friend auto operator<=>(const CodeViolation&, const CodeViolation&) = default;
};

struct CodeVerification {
  std::uint64_t members = 0;
  std::uint64_t probes = 0;
  std::vector<CodeViolation> violations;
  std::string diagnostic;

  bool clean() const { return violations.empty(); }
};

// For every member G and every k-clique K, probes G xor K. Each offending pair
// is reported once, with first < second.
inline CodeVerification verify_code(const GraphBitmap& code, std::size_t clique_size = 5) {
  CodeVerification out;
  const std::size_t n = code.n();
  if (n < clique_size) {
    out.members = code.size();
    out.diagnostic = "n < " + std::to_string(clique_size) + ": no clique differences possible, vacuous pass";
    return out;
  }
  const auto cliques = all_clique_masks(n, clique_size);
  for (std::uint32_t g : code.members()) {
    ++out.members;
    for (std::uint32_t k : cliques) {
      ++out.probes;
      const std::uint32_t h = g ^ k;
      if (g < h && code.contains(h)) out.violations.push_back({g, h, k});
    }
  }
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

// Quadratic reference: compares every pair of members directly.
inline CodeVerification verify_code_pairwise(const std::vector<std::uint32_t>& members, std::size_t n,
                                             std::size_t clique_size = 5) {
  CodeVerification out;
  out.members = members.size();
  const auto cliques = all_clique_masks(n, clique_size);
  const std::set<std::uint32_t> is_clique(cliques.begin(), cliques.end());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ++out.probes;
      const std::uint32_t d = members[i] ^ members[j];
      if (is_clique.count(d)) {
        out.violations.push_back({std::min(members[i], members[j]), std::max(members[i], members[j]), d});
      }
    }
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

}  // namespace parity_ramsey
