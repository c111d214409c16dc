#pragma once

// Forbidden-configuration scanning over the subsets of a colored complete graph.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "parity_ramsey/color_matrix.hpp"
#include "parity_ramsey/combinatorics.hpp"
#include "parity_ramsey/errors.hpp"
#include "parity_ramsey/rng.hpp"
#include "parity_ramsey/small_clique.hpp"

namespace parity_ramsey {

enum class Kind {
  ParityEvenK5,
  ParityEvenK4,
  StripedK4,
  K4Type222,
  K5FewColors,
  MonoOddCycle,
  ForbiddenConfig1,
  ForbiddenConfig2,
  ForbiddenConfig3,
};

inline constexpr std::array<Kind, 9> all_kinds = {
    Kind::ParityEvenK5,     Kind::ParityEvenK4,     Kind::StripedK4,
    Kind::K4Type222,        Kind::K5FewColors,      Kind::MonoOddCycle,
    Kind::ForbiddenConfig1, Kind::ForbiddenConfig2, Kind::ForbiddenConfig3,
};

inline std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::ParityEvenK5: return "parity-even-K5";
    case Kind::ParityEvenK4: return "parity-even-K4";
    case Kind::StripedK4: return "striped-K4";
    case Kind::K4Type222: return "k4-type-222";
    case Kind::K5FewColors: return "k5-few-colors";
    case Kind::MonoOddCycle: return "mono-odd-cycle";
    case Kind::ForbiddenConfig1: return "forbidden-config-1";
    case Kind::ForbiddenConfig2: return "forbidden-config-2";
    case Kind::ForbiddenConfig3: return "forbidden-config-3";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  for (Kind k : all_kinds)
    if (to_string(k) == s) return k;
  throw ConfigurationError("unknown check kind: " + std::string(s));
}

// Subset size a kind is evaluated on; 0 for whole-list checks.
inline std::size_t kind_arity(Kind k) {
  switch (k) {
    case Kind::ParityEvenK4:
    case Kind::StripedK4:
    case Kind::K4Type222: return 4;
    case Kind::MonoOddCycle: return 0;
    default: return 5;
  }
}

struct Edge {
  std::size_t u = 0;
  std::size_t w = 0;
  ColorId color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Violation {
  Kind kind{};
  std::vector<std::size_t> vertices;
  std::vector<Edge> edges;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Colors meeting the edge set an odd number of times. Even colors are omitted.
using ParityVector = std::set<ColorBytes>;

inline ParityVector parity_of_edges(std::span<const std::pair<std::size_t, std::size_t>> edges,
                                    const ColorMatrix& m) {
  ParityVector odd;
  for (const auto& [u, w] : edges) {
    const auto& b = m.bytes(u, w);
    if (!odd.erase(b)) odd.insert(b);
  }
  return odd;
}

inline ParityVector parity_vector(std::span<const std::size_t> subset, const ColorMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j) edges.emplace_back(subset[i], subset[j]);
  return parity_of_edges(edges, m);
}

// Every color class meets the clique evenly. A clique with an odd number of
// edges is never bad; `diagnostic` then says why.
inline bool is_bad_clique(std::span<const std::size_t> subset, const ColorMatrix& m,
                          std::string* diagnostic = nullptr) {
  const std::size_t p = subset.size();
  if ((p * (p - 1) / 2) % 2 != 0) {
    if (diagnostic) *diagnostic = "C(" + std::to_string(p) + ",2) is odd; no clique of this order can be bad";
    return false;
  }
  return parity_vector(subset, m).empty();
}

namespace detail {

template <std::size_t K>
clique::Word<K> word_of(std::span<const std::size_t> s, const ColorMatrix& m) {
  static constexpr auto edges = clique::edge_list<K>();
  std::array<ColorId, clique::edge_count(K)> labels{};
  for (std::size_t e = 0; e < edges.size(); ++e) labels[e] = m.id(s[edges[e].first], s[edges[e].second]);
  return clique::normalize<K, ColorId>(labels);
}

template <std::size_t K>
Violation make_violation(Kind kind, std::vector<std::size_t> verts, const ColorMatrix& m) {
  Violation v{kind, std::move(verts), {}};
  for (std::size_t i = 0; i < v.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < v.vertices.size(); ++j)
      v.edges.push_back({v.vertices[i], v.vertices[j], m.id(v.vertices[i], v.vertices[j])});
  return v;
}

inline std::vector<std::size_t> as_vec(std::span<const std::size_t> s) { return {s.begin(), s.end()}; }

}  // namespace detail

inline std::optional<Violation> check_striped_k4(std::span<const std::size_t> quad, const ColorMatrix& m) {
  if (!clique::is_striped(detail::word_of<4>(quad, m))) return std::nullopt;
  return detail::make_violation<4>(Kind::StripedK4, detail::as_vec(quad), m);
}

// Exactly three colors, each on two edges (any arrangement).
inline std::optional<Violation> check_k4_type_222(std::span<const std::size_t> quad, const ColorMatrix& m) {
  if (!clique::is_type_222(detail::word_of<4>(quad, m))) return std::nullopt;
  return detail::make_violation<4>(Kind::K4Type222, detail::as_vec(quad), m);
}

inline std::optional<Violation> check_k5_min_colors(std::span<const std::size_t> quint, const ColorMatrix& m) {
  if (clique::color_count<5>(detail::word_of<5>(quint, m)) > 3) return std::nullopt;
  return detail::make_violation<5>(Kind::K5FewColors, detail::as_vec(quint), m);
}

// One violation per matched configuration; vertices listed in the matching
// labeling order (a, b, c, d, e).
inline std::vector<Violation> check_forbidden_configs(std::span<const std::size_t> quint, const ColorMatrix& m) {
  std::vector<Violation> out;
  const auto hits = clique::forbidden_configs(detail::word_of<5>(quint, m));
  constexpr std::array<Kind, 3> kinds = {Kind::ForbiddenConfig1, Kind::ForbiddenConfig2, Kind::ForbiddenConfig3};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!hits[k]) continue;
    // hits[k][label] is the position in `quint` playing that label.
    std::vector<std::size_t> order(5);
    for (std::size_t label = 0; label < 5; ++label) order[label] = quint[(*hits[k])[label]];
    out.push_back(detail::make_violation<5>(kinds[k], std::move(order), m));
  }
  return out;
}

// Per color class, a 2-coloring by BFS; a conflict yields an explicit odd cycle.
inline std::vector<Violation> check_mono_odd_cycle(std::span<const std::size_t> verts, const ColorMatrix& m) {
  const std::size_t n = verts.size();
  std::map<ColorId, std::vector<std::pair<std::size_t, std::size_t>>> classes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) classes[m.id(verts[i], verts[j])].emplace_back(i, j);

  std::vector<Violation> out;
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<int> side(n);
  std::vector<std::size_t> parent(n), depth(n);
  for (const auto& [color, edges] : classes) {
    for (auto& a : adj) a.clear();
    for (const auto& [i, j] : edges) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    std::fill(side.begin(), side.end(), -1);
    std::optional<std::pair<std::size_t, std::size_t>> conflict;
    for (std::size_t root = 0; root < n && !conflict; ++root) {
      if (side[root] != -1 || adj[root].empty()) continue;
      side[root] = 0;
      parent[root] = root;
      depth[root] = 0;
      std::deque<std::size_t> queue{root};
      while (!queue.empty() && !conflict) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y : adj[x]) {
          if (side[y] == -1) {
            side[y] = 1 - side[x];
            parent[y] = x;
            depth[y] = depth[x] + 1;
            queue.push_back(y);
          } else if (side[y] == side[x]) {
            conflict = std::pair{x, y};
            break;
          }
        }
      }
    }
    if (!conflict) continue;
    // Walk both endpoints up to their common ancestor.
    auto [x, y] = *conflict;
    std::vector<std::size_t> left{x}, right{y};
    while (x != y) {
      if (depth[x] >= depth[y]) {
        x = parent[x];
        left.push_back(x);
      } else {
        y = parent[y];
        right.push_back(y);
      }
    }
    right.pop_back();  // common ancestor already ends `left`
    std::vector<std::size_t> cycle(left.begin(), left.end());
    cycle.insert(cycle.end(), right.rbegin(), right.rend());
    Violation v{Kind::MonoOddCycle, {}, {}};
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const std::size_t a = verts[cycle[k]], b = verts[cycle[(k + 1) % cycle.size()]];
      v.vertices.push_back(a);
      v.edges.push_back({std::min(a, b), std::max(a, b), color});
    }
    out.push_back(std::move(v));
  }
  return out;
}

enum class ScanMode { Exhaustive, Sample };

struct ScanOptions {
  std::size_t subset_size = 5;
  std::vector<Kind> checks;
  ScanMode mode = ScanMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  unsigned jobs = 1;
  std::uint64_t chunk_size = 1U << 15;
  // Canonical K5 shapes to look for; every 5-subset matching one is counted.
  std::vector<clique::Word<5>> watch;
};

struct ScanSummary {
  std::size_t n = 0;
  std::size_t subset_size = 0;
  ScanMode mode = ScanMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t subsets_scanned = 0;
  std::uint64_t distinct_subsets = 0;
  std::map<Kind, std::uint64_t> per_kind;
  std::uint64_t watch_hits = 0;
  double wall_ms = 0;

  std::uint64_t total_violations() const {
    std::uint64_t t = 0;
    for (const auto& [_, c] : per_kind) t += c;
    return t;
  }
};

namespace detail {

struct ChunkResult {
  std::vector<Violation> violations;
  std::uint64_t scanned = 0;
  std::uint64_t watch_hits = 0;
  std::vector<std::uint64_t> sample_keys;
};

// Kinds evaluated on a subset, cached per normalized word; bit i of the mask is
// all_kinds[i]. Bit 31 marks a watched shape.
class WordClassifier {
 public:
  WordClassifier(std::size_t m, const std::vector<Kind>& checks, const std::set<std::uint64_t>& watch)
      : m_(m), checks_(checks), watch_(watch) {}

  std::uint32_t classify(std::span<const std::size_t> s, const ColorMatrix& mat) {
    std::uint64_t key;
    if (m_ == 4) key = clique::pack<4>(word_of<4>(s, mat));
    else if (m_ == 5) key = clique::pack<5>(word_of<5>(s, mat));
    else return 0;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const std::uint32_t mask = m_ == 4 ? eval4(word_of<4>(s, mat)) : eval5(word_of<5>(s, mat));
    cache_.emplace(key, mask);
    return mask;
  }

  static constexpr std::uint32_t watch_bit = 1U << 31;

 private:
  static std::uint32_t bit(Kind k) {
    return 1U << static_cast<unsigned>(std::find(all_kinds.begin(), all_kinds.end(), k) - all_kinds.begin());
  }
  bool wants(Kind k) const { return std::find(checks_.begin(), checks_.end(), k) != checks_.end(); }

  std::uint32_t eval4(const clique::Word<4>& w) const {
    std::uint32_t mask = 0;
    if (wants(Kind::ParityEvenK4) && clique::all_even<4>(w)) mask |= bit(Kind::ParityEvenK4);
    if (wants(Kind::StripedK4) && clique::is_striped(w)) mask |= bit(Kind::StripedK4);
    if (wants(Kind::K4Type222) && clique::is_type_222(w)) mask |= bit(Kind::K4Type222);
    return mask;
  }

  std::uint32_t eval5(const clique::Word<5>& w) const {
    std::uint32_t mask = 0;
    if (wants(Kind::ParityEvenK5) && clique::all_even<5>(w)) mask |= bit(Kind::ParityEvenK5);
    if (wants(Kind::K5FewColors) && clique::color_count<5>(w) <= 3) mask |= bit(Kind::K5FewColors);
    if (wants(Kind::ForbiddenConfig1) || wants(Kind::ForbiddenConfig2) || wants(Kind::ForbiddenConfig3)) {
      const auto hits = clique::forbidden_configs(w);
      if (hits[0] && wants(Kind::ForbiddenConfig1)) mask |= bit(Kind::ForbiddenConfig1);
      if (hits[1] && wants(Kind::ForbiddenConfig2)) mask |= bit(Kind::ForbiddenConfig2);
      if (hits[2] && wants(Kind::ForbiddenConfig3)) mask |= bit(Kind::ForbiddenConfig3);
    }
    if (!watch_.empty() && watch_.count(clique::pack<5>(clique::canonical<5>(w)))) mask |= watch_bit;
    return mask;
  }

  std::size_t m_;
  const std::vector<Kind>& checks_;
  const std::set<std::uint64_t>& watch_;
  std::unordered_map<std::uint64_t, std::uint32_t> cache_;
};

inline void emit_subset_violations(std::uint32_t mask, std::span<const std::size_t> s, const ColorMatrix& m,
                                   std::vector<Violation>& out) {
  for (std::size_t i = 0; i < all_kinds.size(); ++i) {
    if (!(mask & (1U << i))) continue;
    const Kind k = all_kinds[i];
    switch (k) {
      case Kind::ForbiddenConfig1:
      case Kind::ForbiddenConfig2:
      case Kind::ForbiddenConfig3:
        for (auto& v : check_forbidden_configs(s, m))
          if (v.kind == k) out.push_back(std::move(v));
        break;
      default:
        if (s.size() == 4) out.push_back(make_violation<4>(k, as_vec(s), m));
        else out.push_back(make_violation<5>(k, as_vec(s), m));
    }
  }
}

inline std::vector<std::size_t> sample_subset(std::uint64_t seed, std::uint64_t draw, std::size_t n,
                                              std::size_t m) {
  SplitMix64 rng(mix_seed(seed, draw));
  std::vector<std::size_t> s;
  while (s.size() < m) {
    const auto x = static_cast<std::size_t>(uniform_below(rng, n));
    if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

// Scans m-subsets of the n colored vertices for the requested kinds.
// Exhaustive mode visits every m-subset in lexicographic order; sample mode
// visits `samples` seeded uniform m-subsets (repeats possible and counted).
// Violations reach `sink` in subset order whatever the number of jobs, chunk
// by chunk as soon as each chunk and its predecessors are complete.
template <class Sink>
ScanSummary scan(const ColorMatrix& mat, const ScanOptions& opt, Sink&& sink) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = mat.size();
  const std::size_t m = opt.subset_size;
  if (m < 3 || m > 5) throw ConfigurationError("subset size must be 3, 4 or 5");
  if (n > 4096) throw ConfigurationError("scan supports at most 4096 vertices");
  if (n < m) throw ConfigurationError("fewer vertices than the subset size");
  if (opt.mode == ScanMode::Sample && opt.samples == 0) throw ConfigurationError("sample mode needs a sample count");
  for (Kind k : opt.checks) {
    const std::size_t ar = kind_arity(k);
    if (ar != 0 && ar != m) {
      throw ConfigurationError(std::string(to_string(k)) + " needs subsets of size " + std::to_string(ar) +
                               ", not " + std::to_string(m));
    }
  }
  if (!opt.watch.empty() && m != 5) throw ConfigurationError("watched shapes need subset size 5");

  ScanSummary summary;
  summary.n = n;
  summary.subset_size = m;
  summary.mode = opt.mode;
  summary.seed = opt.seed;
  for (Kind k : opt.checks) summary.per_kind[k] = 0;

  auto deliver = [&](Violation&& v) {
    ++summary.per_kind[v.kind];
    sink(std::move(v));
  };

  if (std::find(opt.checks.begin(), opt.checks.end(), Kind::MonoOddCycle) != opt.checks.end()) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (auto& v : check_mono_odd_cycle(all, mat)) deliver(std::move(v));
  }

  std::set<std::uint64_t> watch;
  for (const auto& w : opt.watch) watch.insert(clique::pack<5>(clique::canonical<5>(w)));

  const std::uint64_t total = opt.mode == ScanMode::Exhaustive ? binomial(n, m) : opt.samples;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk_size);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;

  auto run_chunk = [&](std::uint64_t c, detail::WordClassifier& cls) {
    detail::ChunkResult res;
    const std::uint64_t begin = c * chunk, end = std::min(total, begin + chunk);
    std::vector<std::size_t> s(m);
    auto visit = [&] {
      const std::uint32_t mask = cls.classify(s, mat);
      if (mask & detail::WordClassifier::watch_bit) ++res.watch_hits;
      if (mask & ~detail::WordClassifier::watch_bit) detail::emit_subset_violations(mask, s, mat, res.violations);
      ++res.scanned;
    };
    if (opt.mode == ScanMode::Exhaustive) {
      auto comb = unrank_combination(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m), begin);
      for (std::uint64_t r = begin; r < end; ++r) {
        std::copy(comb.begin(), comb.end(), s.begin());
        visit();
        next_combination(comb, static_cast<std::uint32_t>(n));
      }
    } else {
      for (std::uint64_t d = begin; d < end; ++d) {
        s = detail::sample_subset(opt.seed, d, n, m);
        std::uint64_t key = 0;
        for (auto x : s) key = (key << 12) | x;
        res.sample_keys.push_back(key);
        visit();
      }
    }
    return res;
  };

  std::unordered_set<std::uint64_t> seen_samples;
  auto absorb = [&](detail::ChunkResult&& r) {
    summary.subsets_scanned += r.scanned;
    summary.watch_hits += r.watch_hits;
    seen_samples.insert(r.sample_keys.begin(), r.sample_keys.end());
    for (auto& v : r.violations) deliver(std::move(v));
  };

  const unsigned jobs = std::max(1U, opt.jobs);
  if (jobs == 1 || chunks <= 1) {
    detail::WordClassifier cls(m, opt.checks, watch);
    for (std::uint64_t c = 0; c < chunks; ++c) absorb(run_chunk(c, cls));
  } else {
    std::vector<std::optional<detail::ChunkResult>> slots(chunks);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        detail::WordClassifier cls(m, opt.checks, watch);
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
          auto r = run_chunk(c, cls);
          {
            std::lock_guard lock(mu);
            slots[c] = std::move(r);
          }
          cv.notify_all();
        }
      });
    }
    for (std::uint64_t c = 0; c < chunks; ++c) {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return slots[c].has_value(); });
      auto r = std::move(*slots[c]);
      slots[c].reset();
      lock.unlock();
      absorb(std::move(r));
    }
    for (auto& t : workers) t.join();
  }

  summary.distinct_subsets = opt.mode == ScanMode::Exhaustive ? summary.subsets_scanned : seen_samples.size();
  summary.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

}  // namespace parity_ramsey
