#pragma once

// JSON and CSV renderings of every result type. Key order is fixed by
// nlohmann::ordered_json so output files are byte-stable.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "parity_ramsey/graph_codes.hpp"
#include "parity_ramsey/patterns.hpp"
#include "parity_ramsey/random_construct.hpp"
#include "parity_ramsey/verifier.hpp"

namespace parity_ramsey {

using Json = nlohmann::ordered_json;

// `labels`, when given, maps vertex indices to their text form.
inline Json to_json(const Violation& v, const ColorMatrix& m, const std::vector<std::string>* labels = nullptr) {
  Json j;
  j["kind"] = to_string(v.kind);
  Json verts = Json::array();
  for (auto x : v.vertices) {
    if (labels) verts.push_back((*labels)[x]);
    else verts.push_back(x);
  }
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const auto& e : v.edges) {
    edges.push_back({{"u", e.u}, {"w", e.w}, {"color_hex", to_hex(m.bytes(e.color))}});
  }
  j["edges"] = std::move(edges);
  return j;
}

inline std::string_view to_string(ScanMode m) { return m == ScanMode::Exhaustive ? "exhaustive" : "sample"; }

// Timing is left out so the summary is reproducible.
inline Json to_json(const ScanSummary& s) {
  Json j;
  j["n"] = s.n;
  j["subset_size"] = s.subset_size;
  j["mode"] = to_string(s.mode);
  j["seed"] = s.seed;
  j["subsets_scanned"] = s.subsets_scanned;
  j["distinct_subsets"] = s.distinct_subsets;
  Json kinds = Json::object();
  for (const auto& [k, c] : s.per_kind) kinds[std::string(to_string(k))] = c;
  j["violations"] = std::move(kinds);
  j["total_violations"] = s.total_violations();
  j["watch_hits"] = s.watch_hits;
  return j;
}

inline void write_summary_csv(std::ostream& out, const ScanSummary& s) {
  out << "kind,violations\n";
  for (const auto& [k, c] : s.per_kind) out << to_string(k) << ',' << c << '\n';
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["type"] = r.type;
  j["raw_count"] = r.raw_count;
  j["isomorphism_classes"] = r.classes.size();
  Json applied = Json::array();
  for (Filter f : r.applied) applied.push_back(to_string(f));
  j["filters"] = std::move(applied);
  j["survivors"] = r.survivors().size();
  Json buckets = Json::object();
  for (const auto& [k, ws] : r.buckets()) {
    Json list = Json::array();
    for (const auto& w : ws) list.push_back(pattern_to_string(w));
    buckets[std::to_string(k)] = std::move(list);
  }
  j["buckets"] = std::move(buckets);
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json failed = Json::array();
    for (Filter f : c.failed) failed.push_back(to_string(f));
    classes.push_back({{"pattern", pattern_to_string(c.canonical)},
                       {"raw_members", c.raw_members},
                       {"mono_k12", c.mono_k12},
                       {"failed", std::move(failed)}});
  }
  j["classes"] = std::move(classes);
  return j;
}

inline Json to_json(const CodeReport& r) {
  Json j;
  j["n"] = r.n;
  j["color_count"] = r.color_count;
  Json colors = Json::array();
  for (const auto& c : r.colors) colors.push_back(to_hex(c));
  j["colors"] = std::move(colors);
  Json sizes = Json::array();
  for (const auto& [sig, c] : r.class_sizes) sizes.push_back({{"parity", sig}, {"size", c}});
  j["class_sizes"] = std::move(sizes);
  j["classes"] = r.class_sizes.size();
  j["chosen_parity"] = r.chosen_signature;
  j["chosen_class_size"] = r.chosen_class_size;
  j["total_graphs"] = r.total_graphs;
  j["density"] = {{"numerator", r.chosen_class_size}, {"denominator", r.total_graphs}, {"value", r.density()}};
  return j;
}

inline Json to_json(const CodeVerification& v) {
  Json j;
  j["members"] = v.members;
  j["probes"] = v.probes;
  Json list = Json::array();
  for (const auto& x : v.violations) list.push_back({{"first", x.first}, {"second", x.second}, {"clique", x.clique}});
  j["violations"] = std::move(list);
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  return j;
}

inline Json construct_header(const RandomColoring& rc, double c) {
  return Json{{"n", rc.n}, {"p", rc.p}, {"t", rc.t}, {"c", c}, {"seed", rc.seed}, {"rounds", rc.rounds}};
}

// JSON header line, then "u,w,color_id" for every edge in lexicographic order.
inline void write_coloring(std::ostream& out, const RandomColoring& rc, double c) {
  out << construct_header(rc, c).dump() << '\n';
  for (std::size_t u = 0; u < rc.n; ++u)
    for (std::size_t w = u + 1; w < rc.n; ++w) out << u << ',' << w << ',' << rc.color(u, w) << '\n';
}

inline Json failure_report(const RandomColoring& rc, double c, std::size_t log_tail = 20) {
  Json j = construct_header(rc, c);
  j["converged"] = false;
  j["rounds_attempted"] = rc.rounds;
  j["remaining_bad"] = rc.remaining_bad;
  Json tail = Json::array();
  const std::size_t from = rc.log.size() > log_tail ? rc.log.size() - log_tail : 0;
  for (std::size_t i = from; i < rc.log.size(); ++i)
    tail.push_back({{"round", rc.log[i].round}, {"subset", rc.log[i].subset}});
  j["resample_log_tail"] = std::move(tail);
  return j;
}

}  // namespace parity_ramsey
