// parity-ramsey: command-line front end.
// Exit codes: 0 clean, 1 findings, 2 usage or precondition failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "parity_ramsey/color_codec.hpp"
#include "parity_ramsey/color_matrix.hpp"
#include "parity_ramsey/coloring.hpp"
#include "parity_ramsey/graph_codes.hpp"
#include "parity_ramsey/params.hpp"
#include "parity_ramsey/patterns.hpp"
#include "parity_ramsey/random_construct.hpp"
#include "parity_ramsey/report.hpp"
#include "parity_ramsey/verifier.hpp"
#include "parity_ramsey/vertex.hpp"

namespace pr = parity_ramsey;

namespace {

constexpr int kClean = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output goes to `path`, or stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("PARITY_RAMSEY_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PARITY_RAMSEY_JOBS must be a positive integer, got '") + env + "'");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Common {
  std::size_t beta = 2;
  std::uint64_t n = 64;
  std::string vertices = "lex";
  std::optional<std::uint64_t> seed;
  unsigned jobs = 0;
  std::string out;
};

std::vector<pr::Vertex> make_vertices(const pr::Params& params, const Common& c) {
  if (c.vertices == "lex") return pr::enumerate_vertices(params, c.n, pr::VertexMode::LexFirst);
  if (!c.seed) throw UsageError("--vertices random needs an explicit --seed");
  return pr::enumerate_vertices(params, c.n, pr::VertexMode::SeededRandom, *c.seed);
}

// ---------------------------------------------------------------- color

int cmd_color(std::size_t beta, const std::string& u, const std::string& w) {
  const auto params = pr::derive_params(beta);
  const auto cu = pr::Vertex::parse(u, params);
  const auto cw = pr::Vertex::parse(w, params);
  const auto color = pr::psi(cu, cw, params);
  std::cout << pr::describe(color);
  std::cout << "hex   = " << pr::to_hex(pr::encode_color(color)) << "\n";
  return kClean;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  Common common;
  std::size_t m = 5;
  std::string mode = "exhaustive";
  std::uint64_t samples = 0;
  std::string checks;
  std::vector<std::string> corrupt;
  std::string csv;
  bool watch_survivors = false;
  std::uint64_t chunk = 1U << 15;
};

int cmd_verify(const VerifyArgs& a) {
  const auto params = pr::derive_params(a.common.beta);
  pr::ScanOptions opt;
  opt.subset_size = a.m;
  opt.mode = a.mode == "sample" ? pr::ScanMode::Sample : pr::ScanMode::Exhaustive;
  if (opt.mode == pr::ScanMode::Sample) {
    if (!a.common.seed) throw UsageError("--mode sample needs an explicit --seed");
    if (a.samples == 0) throw UsageError("--mode sample needs --samples > 0");
  }
  opt.seed = a.common.seed.value_or(0);
  opt.samples = a.samples;
  opt.jobs = a.common.jobs;
  opt.chunk_size = a.chunk;
  if (a.checks.empty()) {
    for (pr::Kind k : pr::all_kinds)
      if (pr::kind_arity(k) == a.m || pr::kind_arity(k) == 0) opt.checks.push_back(k);
  } else {
    for (const auto& name : split_csv(a.checks)) opt.checks.push_back(pr::parse_kind(name));
  }
  if (a.watch_survivors) opt.watch = pr::surviving_bad_k5_shapes();

  const auto verts = make_vertices(params, a.common);
  auto mat = pr::psi_matrix(params, verts);
  for (const auto& pair : a.corrupt) {
    const auto parts = split_csv(pair);
    if (parts.size() != 2) throw UsageError("--corrupt expects FROM,TO color ids");
    const auto from = static_cast<pr::ColorId>(std::stoul(parts[0]));
    const auto to = static_cast<pr::ColorId>(std::stoul(parts[1]));
    if (from >= mat.color_count() || to >= mat.color_count()) throw UsageError("--corrupt color id out of range");
    mat.remap(from, to);
  }

  std::vector<std::string> labels;
  for (const auto& v : verts) labels.push_back(v.str());
  Output out(a.common.out.empty() ? std::string("/dev/null") : a.common.out);
  auto summary = pr::scan(mat, opt, [&](pr::Violation&& v) {
    out.stream() << pr::to_json(v, mat, &labels).dump() << '\n';
  });
  out.stream().flush();

  auto j = pr::to_json(summary);
  j["beta"] = a.common.beta;
  j["vertices"] = a.common.vertices;
  j["colors"] = mat.color_count();
  std::cout << j.dump(2) << std::endl;
  std::cerr << "scan wall time: " << summary.wall_ms << " ms\n";
  if (!a.csv.empty()) {
    Output csv(a.csv);
    pr::write_summary_csv(csv.stream(), summary);
  }
  return summary.total_violations() == 0 && summary.watch_hits == 0 ? kClean : kFindings;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& type, const std::vector<std::string>& skip_names, const std::string& out_path) {
  std::set<pr::Filter> skip;
  for (const auto& s : skip_names) skip.insert(pr::parse_filter(s));
  pr::ClassificationReport rep;
  if (type == "22222") rep = pr::classify_22222(skip);
  else if (type == "2224") rep = pr::enumerate_2224_and_filter(skip);
  else throw UsageError("--type must be 22222 or 2224");

  Output out(out_path);
  out.stream() << pr::to_json(rep).dump(2) << '\n';

  const auto buckets = rep.buckets();
  std::cerr << type << ": " << rep.raw_count << " raw, " << rep.classes.size() << " classes, "
            << rep.survivors().size() << " survivors\n";
  if (type == "2224") {
    if (rep.survivors().empty()) return kClean;
    std::cerr << "expected no survivors\n";
    for (const auto* c : rep.survivors()) std::cerr << "+ " << pr::pattern_to_string(c->canonical) << '\n';
    return kFindings;
  }
  if (pr::matches_expected_22222(rep)) return kClean;
  std::cerr << "expected one survivor for each k in {0,1,3,4,5}\n";
  for (const auto& [k, ws] : buckets) {
    std::cerr << "k=" << k << ": " << ws.size() << (k == 2 || ws.size() != 1 ? "  <-- differs" : "") << '\n';
    for (const auto& w : ws) std::cerr << "  " << pr::pattern_to_string(w) << '\n';
  }
  for (std::size_t k : {0, 1, 3, 4, 5})
    if (!buckets.count(k)) std::cerr << "k=" << k << ": 0  <-- differs\n";
  return kFindings;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::size_t n = 0;
  std::size_t p = 4;
  double c = 2.0;
  std::size_t t = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_rounds = 1000000;
  std::string out;
  unsigned jobs = 0;
};

// Bad p-subsets of the finished coloring, counted without the resampler's code.
std::uint64_t independent_bad_count(const pr::RandomColoring& rc, unsigned jobs) {
  const auto mat = pr::ColorMatrix::from_labels(rc.n, rc.colors);
  if (rc.p == 4 || rc.p == 5) {
    pr::ScanOptions opt;
    opt.subset_size = rc.p;
    opt.checks = {rc.p == 4 ? pr::Kind::ParityEvenK4 : pr::Kind::ParityEvenK5};
    opt.jobs = jobs;
    return pr::scan(mat, opt, [](pr::Violation&&) {}).total_violations();
  }
  std::uint64_t bad = 0;
  auto s = pr::unrank_combination(static_cast<std::uint32_t>(rc.n), static_cast<std::uint32_t>(rc.p), 0);
  std::vector<std::size_t> sub(rc.p);
  do {
    std::copy(s.begin(), s.end(), sub.begin());
    bad += pr::is_bad_clique(sub, mat);
  } while (pr::next_combination(s, static_cast<std::uint32_t>(rc.n)));
  return bad;
}

int cmd_construct(const ConstructArgs& a) {
  if (!a.seed) throw UsageError("construct needs an explicit --seed");
  pr::require_bad_capable(a.p);
  const std::size_t t = a.t ? a.t : pr::required_colors(a.n, a.p, a.c);
  const auto rc = pr::moser_tardos(a.n, a.p, t, *a.seed, a.max_rounds);
  Output out(a.out);
  if (!rc.converged) {
    out.stream() << pr::failure_report(rc, a.c).dump(2) << '\n';
    std::cerr << "no convergence after " << rc.rounds << " rounds; " << rc.remaining_bad << " bad K_" << a.p
              << " remain\n";
    return kFindings;
  }
  const auto bad = independent_bad_count(rc, a.jobs);
  if (bad != 0) {
    auto j = pr::failure_report(rc, a.c);
    j["converged"] = true;
    j["verification_bad"] = bad;
    out.stream() << j.dump(2) << '\n';
    std::cerr << "resampler converged but verification found " << bad << " bad copies\n";
    return kFindings;
  }
  pr::write_coloring(out.stream(), rc, a.c);
  std::cerr << "converged: n=" << a.n << " p=" << a.p << " t=" << t << " rounds=" << rc.rounds
            << "; exhaustive check found no bad K_" << a.p << "\n";
  return kClean;
}

// ---------------------------------------------------------------- code

struct CodeArgs {
  Common common;
  std::size_t k = 5;
  std::string report;
  bool plant = false;
};

int cmd_code(const CodeArgs& a) {
  if (a.common.n > pr::max_code_vertices) {
    throw pr::CapacityError("graph codes support n <= 7, got " + std::to_string(a.common.n));
  }
  if (a.k != 4 && a.k != 5) throw UsageError("--k must be 4 or 5");
  const auto params = pr::derive_params(a.common.beta);
  const auto verts = make_vertices(params, a.common);
  const auto mat = pr::psi_matrix(params, verts);
  auto classes = pr::build_parity_classes(a.common.n, mat, a.common.jobs);
  auto code = classes.largest;
  if (a.plant) {
    if (a.common.n < a.k) throw UsageError("--plant needs n >= k");
    // Positive control: add the flip of the least member by the clique on {0..k-1}.
    std::vector<std::uint32_t> first(a.k);
    std::iota(first.begin(), first.end(), 0U);
    const auto g = code.members().front();
    code.insert(g ^ pr::clique_mask(a.common.n, first));
  }
  const auto ver = pr::verify_code(code, a.k);

  auto j = pr::to_json(classes.report);
  j["beta"] = a.common.beta;
  j["clique_size"] = a.k;
  j["planted"] = a.plant;
  j["verification"] = pr::to_json(ver);
  Output rep(a.report);
  rep.stream() << j.dump(2) << '\n';
  if (!a.common.out.empty()) {
    std::ofstream bm(a.common.out, std::ios::binary);
    if (!bm) throw UsageError("cannot open " + a.common.out + " for writing");
    code.write(bm);
  }
  if (!ver.diagnostic.empty()) std::cerr << ver.diagnostic << '\n';
  std::cerr << "largest class " << classes.report.chosen_class_size << " of " << classes.report.total_graphs
            << ", " << ver.violations.size() << " K" << a.k << "-difference pairs\n";
  return ver.clean() ? kClean : kFindings;
}

// ---------------------------------------------------------------- stats

int cmd_stats(const Common& c, const std::string& sizes) {
  const auto params = pr::derive_params(c.beta);
  std::vector<std::uint64_t> ns;
  if (sizes.empty()) {
    const std::uint64_t cap = params.alpha < 20 ? std::uint64_t{1} << params.alpha : std::uint64_t{1} << 10;
    for (std::uint64_t n = 2; n <= cap; n *= 2) ns.push_back(n);
  } else {
    for (const auto& s : split_csv(sizes)) ns.push_back(std::stoull(s));
  }
  Output out(c.out);
  out.stream() << "beta,n,vertices,colors,delta_parts\n";
  for (auto n : ns) {
    Common cc = c;
    cc.n = n;
    const auto cnt = pr::count_colors(params, make_vertices(params, cc));
    out.stream() << c.beta << ',' << n << ',' << c.vertices << ',' << cnt.colors << ',' << cnt.delta_parts << '\n';
  }
  return kClean;
}

void add_common(CLI::App* sub, Common& c, bool with_n = true) {
  sub->add_option("--beta", c.beta, "block parameter beta (alpha = beta^3)")->capture_default_str();
  if (with_n) sub->add_option("--n", c.n, "number of vertices")->required();
  sub->add_option("--vertices", c.vertices, "vertex universe: lex (n smallest) or random (seeded)")
      ->check(CLI::IsMember({"lex", "random"}))
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "RNG seed");
  sub->add_option("--jobs", c.jobs, "worker threads (default: PARITY_RAMSEY_JOBS or core count)");
  sub->add_option("--out", c.out, "output path");
}

int run(int argc, char** argv) {
  CLI::App app{"Parity-avoiding edge colorings: psi coloring, verifier, pattern lab, LLL construction, graph codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "parity-ramsey 1.0");

  std::size_t color_beta = 2;
  std::string cu, cw;
  auto* color = app.add_subcommand("color", "print psi(u, w) and its hex encoding");
  color->add_option("--beta", color_beta)->capture_default_str();
  color->add_option("u", cu, "first vertex bit string")->required();
  color->add_option("w", cw, "second vertex bit string")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "scan subsets for forbidden configurations");
  add_common(verify, va.common);
  verify->add_option("--m", va.m, "subset size (4 or 5)")->capture_default_str();
  verify->add_option("--mode", va.mode)->check(CLI::IsMember({"exhaustive", "sample"}))->capture_default_str();
  verify->add_option("--samples", va.samples, "draws in sample mode");
  verify->add_option("--checks", va.checks, "comma-separated kinds (default: all for --m)");
  verify->add_option("--corrupt", va.corrupt, "FROM,TO: recolor every FROM edge as TO before scanning (repeatable)");
  verify->add_option("--csv", va.csv, "per-kind counts as CSV");
  verify->add_option("--chunk", va.chunk, "subsets per work unit")->capture_default_str();
  verify->add_flag("--watch-survivors", va.watch_survivors, "count 5-subsets shaped like a surviving bad K5 pattern");

  std::string ctype = "22222", cout_path;
  std::vector<std::string> skip;
  auto* classify = app.add_subcommand("classify", "enumerate, filter and classify colored K5 patterns");
  classify->add_option("--type", ctype)->check(CLI::IsMember({"22222", "2224"}))->capture_default_str();
  classify->add_option("--skip-filter", skip, "filter to disable (repeatable)")
      ->check(CLI::IsMember({"min-colors", "odd-cycle", "k4", "forbidden", "multiplicity", "claim31"}));
  classify->add_option("--out", cout_path, "report path");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "random coloring plus Moser-Tardos resampling");
  construct->add_option("--n", ca.n)->required();
  construct->add_option("--p", ca.p)->capture_default_str();
  construct->add_option("--c", ca.c)->capture_default_str();
  construct->add_option("--t", ca.t, "color count (overrides --c)");
  construct->add_option("--seed", ca.seed, "RNG seed")->required();
  construct->add_option("--max-rounds", ca.max_rounds)->capture_default_str();
  construct->add_option("--out", ca.out, "coloring CSV or failure report");
  construct->add_option("--jobs", ca.jobs, "threads for the verification scan");

  CodeArgs da;
  da.common.n = 6;
  auto* code = app.add_subcommand("code", "parity-class graph code and its verification");
  add_common(code, da.common, false);
  code->add_option("--n", da.common.n)->capture_default_str();
  code->add_option("--k", da.k, "clique size of forbidden differences (4 or 5)")->capture_default_str();
  code->add_option("--report", da.report, "CodeReport JSON path");
  code->add_flag("--plant", da.plant, "add a clique-difference pair to the class");

  Common sc;
  std::string sizes;
  auto* stats = app.add_subcommand("stats", "color counts across n as CSV");
  add_common(stats, sc, false);
  stats->add_option("--sizes", sizes, "comma-separated vertex counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kClean : kUsage;
  }

  try {
    for (Common* c : {&va.common, &da.common, &sc})
      if (c->jobs == 0) c->jobs = default_jobs();
    if (ca.jobs == 0) ca.jobs = default_jobs();
    if (color->parsed()) return cmd_color(color_beta, cu, cw);
    if (verify->parsed()) return cmd_verify(va);
    if (classify->parsed()) return cmd_classify(ctype, skip, cout_path);
    if (construct->parsed()) return cmd_construct(ca);
    if (code->parsed()) return cmd_code(da);
    if (stats->parsed()) return cmd_stats(sc, sizes);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
