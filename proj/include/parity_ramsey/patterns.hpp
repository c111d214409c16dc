#pragma once

// Classification of edge-colored K5 shapes of a fixed color type up to
// isomorphism, filtered by the structural properties every psi-colored K5 has.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "parity_ramsey/errors.hpp"
#include "parity_ramsey/small_clique.hpp"

namespace parity_ramsey {

using K5Word = clique::Word<5>;

// Text form: the 10 color ids in edge order ab ac ad ae bc bd be cd ce de.
inline std::string pattern_to_string(const K5Word& w) {
  std::string s;
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (e) s.push_back(' ');
    s += std::to_string(w[e]);
  }
  return s;
}

inline K5Word parse_pattern(std::string_view text) {
  std::istringstream in{std::string(text)};
  K5Word w{};
  std::size_t count = 0;
  int x;
  while (in >> x) {
    if (count == w.size()) throw ShapeError("pattern has more than 10 color ids");
    if (x < 1 || x > 10) throw ShapeError("pattern color ids must be in 1..10");
    w[count++] = static_cast<std::uint8_t>(x);
  }
  if (!in.eof() || count != w.size()) throw ShapeError("pattern must be 10 integer color ids");
  return clique::normalize<5>(w);
}

inline std::size_t mono_k12_count(const K5Word& w) { return clique::mono_paths<5>(w).size(); }

struct SpecialVertexProfile {
  std::size_t s = 0;  // monochromatic K_{1,2} copies having the vertex as a root
  std::size_t t = 0;  // monochromatic K_{1,2} copies inside the K4 avoiding the vertex

  friend bool operator==(const SpecialVertexProfile&, const SpecialVertexProfile&) = default;
};

inline SpecialVertexProfile special_vertex_profile(const K5Word& w, std::size_t v) {
  if (v >= 5) throw IndexError("vertex must be in 0..4");
  const auto paths = clique::mono_paths<5>(w);
  const auto cores = std::count_if(paths.begin(), paths.end(), [&](const auto& p) { return p.core == v; });
  if (cores == 0) throw NotSpecialError("vertex " + std::to_string(v) + " is not the core of a monochromatic K_{1,2}");
  if (cores > 1) throw MultiplicityError("vertex " + std::to_string(v) + " is the core of several monochromatic K_{1,2}");
  SpecialVertexProfile prof;
  for (const auto& p : paths) {
    if (p.root_a == v || p.root_b == v) ++prof.s;
    else if (p.core != v) ++prof.t;
  }
  return prof;
}

enum class Filter { MinColors, OddCycle, K4Shapes, ForbiddenConfigs, Multiplicity, Claim31 };

inline constexpr std::array<Filter, 6> all_filters = {Filter::MinColors,        Filter::OddCycle,
                                                      Filter::K4Shapes,         Filter::ForbiddenConfigs,
                                                      Filter::Multiplicity,     Filter::Claim31};

inline std::string_view to_string(Filter f) {
  switch (f) {
    case Filter::MinColors: return "min-colors";
    case Filter::OddCycle: return "odd-cycle";
    case Filter::K4Shapes: return "k4";
    case Filter::ForbiddenConfigs: return "forbidden";
    case Filter::Multiplicity: return "multiplicity";
    case Filter::Claim31: return "claim31";
  }
  return "?";
}

inline Filter parse_filter(std::string_view s) {
  for (Filter f : all_filters)
    if (to_string(f) == s) return f;
  throw ConfigurationError("unknown filter: " + std::string(s));
}

// True when the shape is ruled out by the filter.
inline bool fails(Filter f, const K5Word& w) {
  switch (f) {
    case Filter::MinColors:
      return clique::color_count<5>(w) < 4;
    case Filter::OddCycle:
      return clique::has_mono_odd_cycle<5>(w);
    case Filter::K4Shapes: {
      for (std::uint8_t skip = 0; skip < 5; ++skip) {
        clique::Word<4> sub{};
        std::array<std::uint8_t, 4> vs{};
        for (std::uint8_t x = 0, k = 0; x < 5; ++x)
          if (x != skip) vs[k++] = x;
        for (std::size_t i = 0, e = 0; i < 4; ++i)
          for (std::size_t j = i + 1; j < 4; ++j) sub[e++] = w[clique::edge_index<5>(vs[i], vs[j])];
        if (clique::is_type_222(sub) || clique::is_striped(sub)) return true;
      }
      return false;
    }
    case Filter::ForbiddenConfigs: {
      const auto hits = clique::forbidden_configs(w);
      return hits[0] || hits[1] || hits[2];
    }
    case Filter::Multiplicity: {
      std::array<int, 5> cores{};
      for (const auto& p : clique::mono_paths<5>(w)) ++cores[p.core];
      return std::any_of(cores.begin(), cores.end(), [](int c) { return c >= 2; });
    }
    case Filter::Claim31: {
      // A vertex that is core of exactly one monochromatic K_{1,2} may not
      // see exactly one such copy in the K4 avoiding it.
      for (std::size_t v = 0; v < 5; ++v) {
        try {
          if (special_vertex_profile(w, v).t == 1) return true;
        } catch (const NotSpecialError&) {
        } catch (const MultiplicityError&) {
        }
      }
      return false;
    }
  }
  return false;
}

// All normalized K5 colorings in which each of five colors covers two edges.
inline std::vector<K5Word> enumerate_22222() {
  std::vector<K5Word> out;
  K5Word w{};
  auto rec = [&](auto&& self, std::uint8_t color) -> void {
    auto first = std::find(w.begin(), w.end(), 0);
    if (first == w.end()) {
      out.push_back(clique::normalize<5>(w));
      return;
    }
    *first = color;
    for (auto it = first + 1; it != w.end(); ++it) {
      if (*it) continue;
      *it = color;
      self(self, color + 1);
      *it = 0;
    }
    *first = 0;
  };
  rec(rec, 1);
  return out;
}

// All normalized K5 colorings of color type (2,2,2,4).
inline std::vector<K5Word> enumerate_2224() {
  std::vector<K5Word> out;
  for (unsigned big = 0; big < (1U << 10); ++big) {
    if (__builtin_popcount(big) != 4) continue;
    std::vector<std::size_t> rest;
    for (std::size_t e = 0; e < 10; ++e)
      if (!(big >> e & 1U)) rest.push_back(e);
    // Perfect matchings of the six remaining edges into three color pairs.
    K5Word w{};
    for (std::size_t e = 0; e < 10; ++e)
      if (big >> e & 1U) w[e] = 4;
    auto rec = [&](auto&& self, std::uint8_t color) -> void {
      auto first = std::find_if(rest.begin(), rest.end(), [&](std::size_t e) { return w[e] == 0; });
      if (first == rest.end()) {
        out.push_back(clique::normalize<5>(w));
        return;
      }
      w[*first] = color;
      for (auto it = first + 1; it != rest.end(); ++it) {
        if (w[*it]) continue;
        w[*it] = color;
        self(self, color + 1);
        w[*it] = 0;
      }
      w[*first] = 0;
    };
    rec(rec, 1);
  }
  return out;
}

struct PatternClass {
  K5Word canonical{};
  std::size_t raw_members = 0;
  std::size_t mono_k12 = 0;
  std::vector<Filter> failed;

  bool survives() const { return failed.empty(); }
};

struct ClassificationReport {
  std::string type;
  std::size_t raw_count = 0;
  std::vector<Filter> applied;
  std::vector<PatternClass> classes;  // every isomorphism class, canonical order

  std::vector<const PatternClass*> survivors() const {
    std::vector<const PatternClass*> out;
    for (const auto& c : classes)
      if (c.survives()) out.push_back(&c);
    return out;
  }

  // Survivors grouped by monochromatic K_{1,2} count.
  std::map<std::size_t, std::vector<K5Word>> buckets() const {
    std::map<std::size_t, std::vector<K5Word>> out;
    for (const auto* c : survivors()) out[c->mono_k12].push_back(c->canonical);
    return out;
  }
};

// Deduplicates `patterns` up to isomorphism and applies `filters` to every class.
inline ClassificationReport filter_and_classify(const std::vector<K5Word>& patterns, std::vector<Filter> filters,
                                                std::string type = "22222") {
  ClassificationReport rep;
  rep.type = std::move(type);
  rep.raw_count = patterns.size();
  rep.applied = std::move(filters);
  std::map<K5Word, std::size_t> count;
  for (const auto& w : patterns) ++count[clique::canonical<5>(w)];
  for (const auto& [w, members] : count) {
    PatternClass pc;
    pc.canonical = w;
    pc.raw_members = members;
    pc.mono_k12 = mono_k12_count(w);
    for (Filter f : rep.applied)
      if (fails(f, w)) pc.failed.push_back(f);
    rep.classes.push_back(std::move(pc));
  }
  return rep;
}

inline std::vector<Filter> filters_without(const std::set<Filter>& skip, bool with_multiplicity = true) {
  std::vector<Filter> out;
  for (Filter f : all_filters) {
    if (skip.count(f)) continue;
    if (f == Filter::Multiplicity && !with_multiplicity) continue;
    out.push_back(f);
  }
  return out;
}

inline ClassificationReport classify_22222(const std::set<Filter>& skip = {}) {
  return filter_and_classify(enumerate_22222(), filters_without(skip), "22222");
}

// The multiplicity exclusion is argued only for type (2,2,2,2,2), so it is not
// applied here.
inline ClassificationReport enumerate_2224_and_filter(const std::set<Filter>& skip = {}) {
  return filter_and_classify(enumerate_2224(), filters_without(skip, false), "2224");
}

// Every K5 shape with all class sizes even that survives the filters. Types
// with at most three colors fail min-colors outright, which leaves (2,2,2,2,2)
// and (2,2,2,4).
inline std::vector<K5Word> surviving_bad_k5_shapes() {
  std::vector<K5Word> out;
  for (const auto& rep : {classify_22222(), enumerate_2224_and_filter()})
    for (const auto* c : rep.survivors()) out.push_back(c->canonical);
  return out;
}

// Exactly five survivor classes, one for each of 0, 1, 3, 4, 5 monochromatic
// K_{1,2} copies.
inline bool matches_expected_22222(const ClassificationReport& rep) {
  const auto b = rep.buckets();
  if (rep.survivors().size() != 5 || b.size() != 5) return false;
  for (std::size_t k : {0, 1, 3, 4, 5}) {
    auto it = b.find(k);
    if (it == b.end() || it->second.size() != 1) return false;
  }
  return true;
}

}  // namespace parity_ramsey
