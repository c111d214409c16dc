#pragma once

// Random t-coloring of K_n followed by Moser-Tardos resampling of bad K_p.
//
// RNG: one std::mt19937_64 stream. The initial coloring draws edges in
// lexicographic order; each round resamples the edges of the
// lexicographically least bad p-subset, again in lexicographic edge order.

#include <algorithm>
#include <bit>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <set>
#include <vector>

#include "parity_ramsey/combinatorics.hpp"
#include "parity_ramsey/errors.hpp"
#include "parity_ramsey/rng.hpp"

namespace parity_ramsey {

inline void require_bad_capable(std::size_t p) {
  if (p < 4) throw InvalidParameter("clique order p must be >= 4");
  if (p % 4 != 0 && p % 4 != 1) {
    throw ParityError("C(" + std::to_string(p) + ",2) is odd; no K_" + std::to_string(p) + " can be bad");
  }
}

inline double color_exponent(std::size_t p) {
  return 4.0 * static_cast<double>(p - 2) / static_cast<double>(p * (p - 1));
}

// t = ceil(c * n^(4(p-2)/(p(p-1)))), at least 1.
inline std::size_t required_colors(std::size_t n, std::size_t p, double c) {
  require_bad_capable(p);
  if (n < p) throw InvalidParameter("n must be >= p");
  if (!(c > 0)) throw InvalidParameter("c must be positive");
  const double t = std::ceil(c * std::pow(static_cast<double>(n), color_exponent(p)) - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

struct BadProbabilityBound {
  // sum over 1 <= i <= C(p,2)/2 with C(p,2)/i an even integer of t^i (i/t)^C(p,2), capped at 1
  double displayed_sum = 0;
  // Exact P[bad] for a uniform t-coloring, by enumerating even compositions of
  // C(p,2); capped at 1
  double composition_bound = 0;
  // t^(-p(p-1)/4)
  double leading_term = 0;
};

namespace detail {

// Accumulates, over multisets of even class sizes adding up to `total`, the
// probability that a uniform t-coloring of `total` edges has exactly those
// class sizes.
inline void even_compositions(std::size_t left, std::size_t min_part, std::size_t parts,
                              std::vector<std::size_t>& sizes, std::size_t total, double t, double& acc) {
  if (left == 0) {
    if (static_cast<double>(parts) > t) return;
    double lw = std::lgamma(static_cast<double>(total) + 1);
    for (std::size_t s : sizes) lw -= std::lgamma(static_cast<double>(s) + 1);
    // Ordered choice of distinct colors for the classes, divided by the
    // symmetries among equal class sizes.
    lw += std::lgamma(t + 1) - std::lgamma(t - static_cast<double>(parts) + 1);
    std::size_t run = 1;
    for (std::size_t k = 1; k <= sizes.size(); ++k) {
      if (k < sizes.size() && sizes[k] == sizes[k - 1]) {
        ++run;
      } else {
        lw -= std::lgamma(static_cast<double>(run) + 1);
        run = 1;
      }
    }
    acc += std::exp(lw - static_cast<double>(total) * std::log(t));
    return;
  }
  for (std::size_t s = min_part; s <= left; s += 2) {
    sizes.push_back(s);
    even_compositions(left - s, s, parts + 1, sizes, total, t, acc);
    sizes.pop_back();
  }
}

}  // namespace detail

inline BadProbabilityBound bad_probability_bound(std::size_t p, std::size_t t) {
  require_bad_capable(p);
  if (t < 1) throw InvalidParameter("t must be >= 1");
  const std::size_t edges = p * (p - 1) / 2;
  const double tt = static_cast<double>(t);
  BadProbabilityBound out;

  double sum = 0;
  for (std::size_t i = 1; 2 * i <= edges; ++i) {
    if (edges % i != 0 || (edges / i) % 2 != 0) continue;
    sum += std::exp(static_cast<double>(i) * std::log(tt) +
                    static_cast<double>(edges) * (std::log(static_cast<double>(i)) - std::log(tt)));
  }
  out.displayed_sum = std::min(1.0, sum);

  double acc = 0;
  std::vector<std::size_t> sizes;
  detail::even_compositions(edges, 2, 0, sizes, edges, tt, acc);
  out.composition_bound = std::min(1.0, acc);

  out.leading_term = std::pow(tt, -static_cast<double>(p * (p - 1)) / 4.0);
  return out;
}

struct LllCondition {
  std::uint64_t dependency = 0;  // D = C(p,2) * C(n-2, p-2)
  double product = 0;            // e * bound * (D + 1), bound = displayed_sum
  bool satisfied = false;
};

inline LllCondition lll_condition(std::size_t n, std::size_t p, std::size_t t) {
  require_bad_capable(p);
  if (n < p) throw InvalidParameter("n must be >= p");
  LllCondition out;
  out.dependency = binomial(p, 2) * binomial(n - 2, p - 2);
  const double bound = bad_probability_bound(p, t).displayed_sum;
  out.product = std::numbers::e * bound * static_cast<double>(out.dependency + 1);
  out.satisfied = out.product < 1.0;
  return out;
}

struct ResampleStep {
  std::uint64_t round = 0;
  std::vector<std::uint32_t> subset;

  friend bool operator==(const ResampleStep&, const ResampleStep&) = default;
};

struct RandomColoring {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t t = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> colors;  // edge (u,w), u<w, in lexicographic edge order; ids in [0, t)
  std::vector<ResampleStep> log;
  bool converged = false;
  std::uint64_t rounds = 0;
  std::uint64_t remaining_bad = 0;

  std::uint32_t color(std::size_t u, std::size_t w) const { return colors[edge_slot(n, u, w)]; }

  static std::size_t edge_slot(std::size_t n, std::size_t u, std::size_t w) {
    if (u > w) std::swap(u, w);
    return u * (2 * n - u - 1) / 2 + (w - u - 1);
  }
};

// The uniform coloring every run starts from.
inline std::vector<std::uint32_t> initial_coloring(std::size_t n, std::size_t t, std::mt19937_64& gen) {
  std::vector<std::uint32_t> colors(n * (n - 1) / 2);
  for (auto& c : colors) c = static_cast<std::uint32_t>(uniform_below(gen, t));
  return colors;
}

namespace detail {

// Subsets packed 8 bits per vertex so that integer order is lexicographic order.
inline std::uint64_t pack_subset(std::span<const std::uint32_t> s) {
  std::uint64_t key = 0;
  for (auto x : s) key = (key << 8) | x;
  return key;
}

inline std::vector<std::uint32_t> unpack_subset(std::uint64_t key, std::size_t p) {
  std::vector<std::uint32_t> s(p);
  for (std::size_t k = p; k-- > 0;) {
    s[k] = static_cast<std::uint32_t>(key & 0xFF);
    key >>= 8;
  }
  return s;
}

inline bool subset_is_bad(std::span<const std::uint32_t> s, const std::vector<std::uint32_t>& colors, std::size_t n) {
  // Colors with odd multiplicity so far; p <= 8 gives at most 28 edges.
  std::array<std::uint32_t, 28> odd{};
  std::size_t used = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto c = colors[RandomColoring::edge_slot(n, s[i], s[j])];
      std::size_t k = 0;
      while (k < used && odd[k] != c) ++k;
      if (k == used) odd[used++] = c;
      else odd[k] = odd[--used];
    }
  return used == 0;
}

}  // namespace detail

inline bool is_bad_subset(const RandomColoring& rc, std::span<const std::uint32_t> subset) {
  return detail::subset_is_bad(subset, rc.colors, rc.n);
}

// Every bad p-subset, in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> find_bad_subsets(const RandomColoring& rc) {
  std::vector<std::vector<std::uint32_t>> out;
  auto s = unrank_combination(static_cast<std::uint32_t>(rc.n), static_cast<std::uint32_t>(rc.p), 0);
  do {
    if (detail::subset_is_bad(s, rc.colors, rc.n)) out.push_back(s);
  } while (next_combination(s, static_cast<std::uint32_t>(rc.n)));
  return out;
}

// Returns the coloring with converged = true when no bad K_p remains, or
// converged = false with the resample log and remaining bad count after
// `max_rounds` resamplings.
inline RandomColoring moser_tardos(std::size_t n, std::size_t p, std::size_t t, std::uint64_t seed,
                                   std::uint64_t max_rounds) {
  require_bad_capable(p);
  if (n < p) throw InvalidParameter("n must be >= p");
  if (n > 255) throw CapacityError("moser_tardos supports at most 255 vertices");
  if (p > 8) throw CapacityError("moser_tardos supports p <= 8");
  if (t < 1) throw InvalidParameter("t must be >= 1");

  RandomColoring rc;
  rc.n = n;
  rc.p = p;
  rc.t = t;
  rc.seed = seed;
  std::mt19937_64 gen(seed);
  rc.colors = initial_coloring(n, t, gen);

  // Flat symmetric color matrix for O(1) lookups inside the update loop.
  std::vector<std::uint32_t> mat(n * n, 0);
  auto set_color = [&](std::uint32_t u, std::uint32_t w, std::uint32_t c) {
    rc.colors[RandomColoring::edge_slot(n, u, w)] = c;
    mat[u * n + w] = mat[w * n + u] = c;
  };
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t w = u + 1; w < n; ++w) mat[u * n + w] = mat[w * n + u] = rc.color(u, w);

  auto is_bad = [&](const std::array<std::uint32_t, 8>& v) {
    if (t <= 64) {
      std::uint64_t odd = 0;
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) odd ^= std::uint64_t{1} << mat[v[i] * n + v[j]];
      return odd == 0;
    }
    return detail::subset_is_bad(std::span<const std::uint32_t>(v.data(), p), rc.colors, n);
  };

  // Lexicographic rank of a sorted subset, used to index a dense membership
  // table when C(n, p) is small enough; otherwise the ordered set doubles as it.
  const std::uint64_t total = binomial(n, p);
  const bool dense = total <= (std::uint64_t{1} << 26);
  std::vector<std::vector<std::uint64_t>> below(p, std::vector<std::uint64_t>(n + 1, 0));
  if (dense)
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t x = 0; x < n; ++x)
        below[i][x + 1] = below[i][x] + (n - x - 1 >= p - i - 1 ? binomial(n - x - 1, p - i - 1) : 0);
  auto rank_of = [&](const std::array<std::uint32_t, 8>& v) {
    std::uint64_t r = 0;
    std::uint32_t lo = 0;
    for (std::size_t i = 0; i < p; ++i) {
      r += below[i][v[i]] - below[i][lo];
      lo = v[i] + 1;
    }
    return r;
  };
  std::vector<std::uint8_t> member(dense ? total : 0, 0);

  std::set<std::uint64_t> bad;
  std::array<std::uint32_t, 8> cur{};
  for (const auto& sub : find_bad_subsets(rc)) {
    bad.insert(detail::pack_subset(sub));
    if (dense) {
      std::copy(sub.begin(), sub.end(), cur.begin());
      member[rank_of(cur)] = 1;
    }
  }
  auto update = [&](const std::array<std::uint32_t, 8>& v) {
    const bool now = is_bad(v);
    if (dense) {
      auto& m = member[rank_of(v)];
      if (m == now) return;
      m = now;
    }
    const auto key = detail::pack_subset(std::span<const std::uint32_t>(v.data(), p));
    if (now) bad.insert(key);
    else bad.erase(key);
  };

  std::vector<std::uint32_t> rest;
  std::array<std::uint32_t, 8> a{}, b{};
  while (!bad.empty() && rc.rounds < max_rounds) {
    const auto victim = detail::unpack_subset(*bad.begin(), p);
    ++rc.rounds;
    rc.log.push_back({rc.rounds, victim});
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        set_color(victim[i], victim[j], static_cast<std::uint32_t>(uniform_below(gen, t)));

    // Re-examine each p-subset sharing at least two vertices with the victim
    // exactly once: pick its victim part A, then its remaining part B.
    rest.clear();
    for (std::uint32_t x = 0, k = 0; x < n; ++x) {
      if (k < p && victim[k] == x) ++k;
      else rest.push_back(x);
    }
    for (std::uint32_t mask = 0; mask < (1U << p); ++mask) {
      const std::size_t na = static_cast<std::size_t>(std::popcount(mask));
      if (na < 2) continue;
      std::size_t k = 0;
      for (std::size_t i = 0; i < p; ++i)
        if (mask >> i & 1) a[k++] = victim[i];
      const std::size_t nb = p - na;
      if (nb > rest.size()) continue;
      std::vector<std::uint32_t> pick(nb);
      for (std::size_t i = 0; i < nb; ++i) pick[i] = static_cast<std::uint32_t>(i);
      do {
        for (std::size_t i = 0; i < nb; ++i) b[i] = rest[pick[i]];
        std::merge(a.begin(), a.begin() + na, b.begin(), b.begin() + nb, cur.begin());
        update(cur);
      } while (nb > 0 && next_combination(pick, static_cast<std::uint32_t>(rest.size())));
    }
  }
  rc.converged = bad.empty();
  rc.remaining_bad = bad.size();
  return rc;
}

}  // namespace parity_ramsey
