#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "parity_ramsey/random_construct.hpp"
#include "parity_ramsey/verifier.hpp"

using namespace parity_ramsey;

TEST(RequiredColors, Examples) {
  EXPECT_DOUBLE_EQ(color_exponent(4), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(color_exponent(5), 3.0 / 5.0);
  EXPECT_EQ(required_colors(50, 4, 2), 28u);
  EXPECT_EQ(required_colors(20, 4, 2), 15u);
  // 8^(2/3) = 4 exactly; the ceiling must not round up to 5.
  EXPECT_EQ(required_colors(8, 4, 1), 4u);
  EXPECT_EQ(required_colors(4, 4, 0.01), 1u);
}

TEST(RequiredColors, Preconditions) {
  EXPECT_THROW(required_colors(20, 6, 2), ParityError);
  EXPECT_THROW(required_colors(20, 7, 2), ParityError);
  EXPECT_THROW(required_colors(20, 3, 2), InvalidParameter);
  EXPECT_THROW(required_colors(3, 4, 2), InvalidParameter);
  EXPECT_THROW(required_colors(20, 4, 0), InvalidParameter);
  EXPECT_NO_THROW(required_colors(20, 8, 2));
  EXPECT_NO_THROW(required_colors(20, 9, 2));
}

TEST(BadProbability, DisplayedSumByHand) {
  // p=4: C(4,2)=6, admissible i are 1 and 3 (6/1=6 and 6/3=2 even; 6/2=3 odd).
  const double t = 28;
  const double want = t * std::pow(1 / t, 6) + t * t * t * std::pow(3 / t, 6);
  const auto b = bad_probability_bound(4, 28);
  EXPECT_NEAR(b.displayed_sum, want, 1e-15);
  EXPECT_LE(b.displayed_sum, 1.0);
  EXPECT_NEAR(b.leading_term, std::pow(t, -3.0), 1e-15);
}

TEST(BadProbability, CompositionBoundMatchesCharacterSum) {
  for (std::size_t p : {4, 5, 8}) {
    const std::size_t edges = p * (p - 1) / 2;
    for (std::size_t t : {2, 3, 7, 15, 28, 100}) {
      const double exact = oracle::even_class_probability(edges, t);
      EXPECT_NEAR(bad_probability_bound(p, t).composition_bound, std::min(1.0, exact), 1e-12 + 1e-9 * exact)
          << "p=" << p << " t=" << t;
    }
  }
}

TEST(BadProbability, CompositionBoundMatchesMonteCarlo) {
  std::mt19937_64 gen(1);
  const std::size_t t = 4, trials = 200000;
  std::size_t bad = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    std::array<int, 4> cnt{};
    for (int e = 0; e < 6; ++e) ++cnt[gen() % t];
    bad += std::all_of(cnt.begin(), cnt.end(), [](int c) { return c % 2 == 0; });
  }
  EXPECT_NEAR(static_cast<double>(bad) / trials, bad_probability_bound(4, t).composition_bound, 0.005);
}

TEST(BadProbability, EvenPartitionsOfTen) {
  // Seven even partitions of C(5,2) = 10.
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  oracle::even_partitions(10, 10, cur, parts);
  EXPECT_EQ(parts.size(), 7u);
  // With t large the exact probability is dominated by the (2,2,2,2,2) term:
  // 10!/(2^5 5!) t(t-1)...(t-4) / t^10.
  const double t = 1e4;
  const double lead = 945.0 * t * (t - 1) * (t - 2) * (t - 3) * (t - 4) / std::pow(t, 10);
  EXPECT_NEAR(bad_probability_bound(5, 10000).composition_bound / lead, 1.0, 1e-3);
}

TEST(BadProbability, LeadingOrder) {
  for (std::size_t p : {4, 5}) {
    const double e = static_cast<double>(p * (p - 1)) / 4.0;
    double prev = 0;
    for (std::size_t t : {1000, 10000, 100000, 1000000}) {
      const auto b = bad_probability_bound(p, t);
      const double scaled = b.composition_bound * std::pow(static_cast<double>(t), e);
      EXPECT_LT(scaled, 1e3);
      EXPECT_GT(scaled, 0);
      if (prev > 0) { EXPECT_NEAR(scaled / prev, 1.0, 0.01); }
      prev = scaled;
    }
  }
}

TEST(BadProbability, DegenerateSingleColorIsCapped) {
  const auto b = bad_probability_bound(4, 1);
  EXPECT_DOUBLE_EQ(b.displayed_sum, 1.0);
  EXPECT_DOUBLE_EQ(b.composition_bound, 1.0);
  EXPECT_THROW(bad_probability_bound(6, 10), ParityError);
}

TEST(Lll, Dependency) {
  EXPECT_EQ(lll_condition(50, 4, 28).dependency, 6768u);
  EXPECT_EQ(lll_condition(4, 4, 10).dependency, 6u);
  EXPECT_EQ(lll_condition(5, 5, 10).dependency, 10u);
}

TEST(Lll, MonotoneInColors) {
  bool seen = false;
  double prev = 1e300;
  for (std::size_t t = 2; t < 5000; t *= 2) {
    const auto c = lll_condition(50, 4, t);
    EXPECT_LE(c.product, prev);
    prev = c.product;
    if (seen) { EXPECT_TRUE(c.satisfied); }
    seen = seen || c.satisfied;
  }
  EXPECT_TRUE(seen);
}

TEST(MoserTardos, ConvergesAndVerifies) {
  const std::size_t t = required_colors(20, 4, 2);
  const auto rc = moser_tardos(20, 4, t, 7, 1000000);
  ASSERT_TRUE(rc.converged);
  EXPECT_EQ(rc.remaining_bad, 0u);
  EXPECT_EQ(rc.colors.size(), 190u);
  for (auto c : rc.colors) EXPECT_LT(c, t);
  // Independent check through the verifier's parity test.
  const auto m = ColorMatrix::from_labels(20, rc.colors);
  std::vector<std::size_t> s(4);
  std::size_t bad = 0;
  for (s[0] = 0; s[0] < 20; ++s[0])
    for (s[1] = s[0] + 1; s[1] < 20; ++s[1])
      for (s[2] = s[1] + 1; s[2] < 20; ++s[2])
        for (s[3] = s[2] + 1; s[3] < 20; ++s[3]) bad += is_bad_clique(s, m);
  EXPECT_EQ(bad, 0u);
}

TEST(MoserTardos, Deterministic) {
  const auto a = moser_tardos(16, 4, 6, 99, 100000);
  const auto b = moser_tardos(16, 4, 6, 99, 100000);
  EXPECT_EQ(a.colors, b.colors);
  EXPECT_EQ(a.log, b.log);
  EXPECT_EQ(a.rounds, b.rounds);
  EXPECT_GT(a.rounds, 0u);
  const auto c = moser_tardos(16, 4, 6, 100, 100000);
  EXPECT_NE(a.colors, c.colors);
}

TEST(MoserTardos, ResamplesLexLeastBadSubset) {
  const auto rc = moser_tardos(14, 4, 5, 3, 1);
  if (rc.log.empty()) GTEST_SKIP() << "initial coloring already good";
  RandomColoring start = rc;
  std::mt19937_64 gen(3);
  start.colors = initial_coloring(14, 5, gen);
  const auto bad = find_bad_subsets(start);
  ASSERT_FALSE(bad.empty());
  EXPECT_EQ(rc.log.front().subset, bad.front());
}

TEST(MoserTardos, InitialColoringIsTheSeededSample) {
  const auto rc = moser_tardos(12, 4, 9, 5, 0);
  std::mt19937_64 gen(5);
  std::vector<std::uint32_t> want(66);
  for (auto& c : want) c = static_cast<std::uint32_t>(uniform_below(gen, 9));
  EXPECT_EQ(rc.colors, want);
  EXPECT_EQ(rc.rounds, 0u);
}

TEST(MoserTardos, SingleColorNeverConverges) {
  const auto rc = moser_tardos(10, 4, 1, 1, 50);
  EXPECT_FALSE(rc.converged);
  EXPECT_EQ(rc.rounds, 50u);
  EXPECT_EQ(rc.log.size(), 50u);
  EXPECT_EQ(rc.remaining_bad, binomial(10, 4));
}

TEST(MoserTardos, DetectionAgreesWithVerifier) {
  std::mt19937_64 gen(12);
  RandomColoring rc;
  rc.n = 18;
  rc.p = 4;
  rc.t = 3;
  rc.colors = initial_coloring(18, 3, gen);
  const auto m = ColorMatrix::from_labels(18, rc.colors);
  for (std::size_t p : {4, 5}) {
    rc.p = p;
    auto s = unrank_combination(18, static_cast<std::uint32_t>(p), 0);
    std::vector<std::size_t> sub(p);
    do {
      std::copy(s.begin(), s.end(), sub.begin());
      ASSERT_EQ(is_bad_subset(rc, s), is_bad_clique(sub, m));
    } while (next_combination(s, 18));
  }
}

TEST(MoserTardos, IncrementalBadSetMatchesFullRescan) {
  // With a tiny budget the remaining count must equal a fresh full scan.
  for (std::uint64_t budget : {1, 5, 40}) {
    const auto rc = moser_tardos(15, 4, 4, 8, budget);
    EXPECT_EQ(rc.remaining_bad, find_bad_subsets(rc).size());
  }
}

TEST(MoserTardos, Preconditions) {
  EXPECT_THROW(moser_tardos(20, 6, 10, 1, 10), ParityError);
  EXPECT_THROW(moser_tardos(3, 4, 10, 1, 10), InvalidParameter);
  EXPECT_THROW(moser_tardos(300, 4, 10, 1, 10), CapacityError);
  EXPECT_THROW(moser_tardos(20, 4, 0, 1, 10), InvalidParameter);
}
