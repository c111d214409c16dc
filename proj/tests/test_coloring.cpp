#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "parity_ramsey/coloring.hpp"

using namespace parity_ramsey;

namespace {

const Params P2 = derive_params(2);

Vertex V(const char* s) { return Vertex::parse(s, P2); }

std::string S(BitView b) { return bits_to_string(b); }

Bits B(const char* s) { return bits_from_string(s); }

}  // namespace

TEST(Block, Examples) {
  const auto v = V("00010000");
  EXPECT_EQ(S(block(v.bits(), P2, 2, 1)), "0001");
  EXPECT_EQ(S(block(v.bits(), P2, 2, 2)), "0000");
  EXPECT_EQ(S(block(v.bits(), P2, 0, 4)), "1");
  EXPECT_THROW(block(v.bits(), P2, 2, 3), IndexError);
  EXPECT_THROW(block(v.bits(), P2, 2, 0), IndexError);
  const auto odd = B("000");
  EXPECT_THROW(block(odd, P2, 1, 1), ShapeError);
}

TEST(Eta, Examples) {
  EXPECT_EQ(to_string(eta(2, B("00000000"), B("00010000"), P2)), "(1,{0000,0001})");
  EXPECT_EQ(to_string(eta(1, B("0000"), B("0001"), P2)), "(2,{00,01})");
  EXPECT_FALSE(eta(2, B("00010000"), B("00010000"), P2).has_value());
}

TEST(Eta, ShapeErrors) {
  EXPECT_THROW(eta(1, B("0000"), B("00"), P2), ShapeError);
  EXPECT_THROW(eta(2, B("000000"), B("000000"), P2), ShapeError);
}

TEST(Eta, PairIsUnordered) {
  EXPECT_EQ(eta(2, B("00010000"), B("00000000"), P2), eta(2, B("00000000"), B("00010000"), P2));
}

TEST(Xi, WorkedExample) {
  const auto v = V("00000000"), w = V("00010000");
  const auto x2 = xi(2, v.bits(), w.bits(), P2);
  ASSERT_EQ(x2.size(), 1u);
  EXPECT_EQ(to_string(x2[0]), "(1,{0000,0001})");
  const auto x1 = xi(1, v.bits(), w.bits(), P2);
  ASSERT_EQ(x1.size(), 2u);
  EXPECT_EQ(to_string(x1[0]), "(2,{00,01})");
  EXPECT_EQ(to_string(x1[1]), "0");
  const auto x0 = xi(0, v.bits(), w.bits(), P2);
  ASSERT_EQ(x0.size(), 4u);
  EXPECT_EQ(to_string(x0[0]), "0");
  EXPECT_EQ(to_string(x0[1]), "(2,{0,1})");
  EXPECT_EQ(to_string(x0[2]), "0");
  EXPECT_EQ(to_string(x0[3]), "0");
}

TEST(Delta, Examples) {
  const auto v = V("00000000"), w = V("00010000");
  EXPECT_EQ(delta(1, v, w, P2), +1);
  EXPECT_EQ(delta(2, v, w, P2), 0);
  EXPECT_EQ(delta(1, v, v, P2), 0);
  EXPECT_THROW(delta(1, w, v, P2), OrderingError);
}

TEST(Psi, WorkedExampleAndSymmetry) {
  const auto v = V("00000000"), w = V("00010000");
  const auto c = psi(v, w, P2);
  EXPECT_EQ(to_string(c.xi2), "(1,{0000,0001})");
  EXPECT_EQ(c.delta_part, (std::vector<std::int8_t>{+1, 0}));
  EXPECT_EQ(psi(w, v, P2), c);
  EXPECT_THROW(psi(v, v, P2), SelfLoopError);
  EXPECT_THROW(psi(v, Vertex(B("0000")), P2), ShapeError);
}

TEST(Psi, MatchesStringOracle) {
  for (std::size_t beta : {2, 3}) {
    const auto params = derive_params(beta);
    std::mt19937_64 gen(11 + beta);
    for (int trial = 0; trial < 400; ++trial) {
      std::string a(params.alpha, '0'), b(params.alpha, '0');
      for (auto& ch : a) ch = static_cast<char>('0' + (gen() & 1U));
      b = a;
      // Flip a few bits so that many η levels are exercised.
      const int flips = 1 + static_cast<int>(gen() % 4);
      for (int f = 0; f < flips; ++f) b[gen() % params.alpha] ^= 1;
      if (a == b) continue;
      const auto got = psi(Vertex::parse(a, params), Vertex::parse(b, params), params);
      const auto want = oracle::psi(a, b, beta);
      EXPECT_EQ(to_string(got.xi2), want.xi2);
      ASSERT_EQ(got.xi1.size(), want.xi1.size());
      ASSERT_EQ(got.xi0.size(), want.xi0.size());
      for (std::size_t j = 0; j < got.xi1.size(); ++j) EXPECT_EQ(to_string(got.xi1[j]), want.xi1[j]);
      for (std::size_t j = 0; j < got.xi0.size(); ++j) EXPECT_EQ(to_string(got.xi0[j]), want.xi0[j]);
      ASSERT_EQ(got.delta_part.size(), beta);
      for (std::size_t i = 0; i < beta; ++i) EXPECT_EQ(got.delta_part[i], want.delta[i]);
    }
  }
}

TEST(Psi, Invariants) {
  const auto params = derive_params(3);
  const auto vs = enumerate_vertices(params, 60, VertexMode::SeededRandom, 9);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const auto& v = vs[i];
      const auto& w = vs[j];
      // eta recomputation: earlier blocks agree, the pair is the differing blocks.
      for (std::size_t d = 0; d < 3; ++d) {
        const auto e = eta(d, v.bits(), w.bits(), params);
        ASSERT_TRUE(e.has_value());
        for (std::size_t k = 1; k < e->index; ++k)
          EXPECT_EQ(S(block(v.bits(), params, d, k)), S(block(w.bits(), params, d, k)));
        std::set<std::string> pair{S(block(v.bits(), params, d, e->index)), S(block(w.bits(), params, d, e->index))};
        EXPECT_EQ(pair, (std::set<std::string>{S(e->low), S(e->high)}));
        EXPECT_NE(e->low, e->high);
      }
      const auto c = psi(v, w, params);
      EXPECT_EQ(c.xi2, eta(2, v.bits(), w.bits(), params));
      EXPECT_EQ(c.xi1.size(), params.a[2]);
      EXPECT_EQ(c.xi0.size(), params.a[1]);
      EXPECT_EQ(c.delta_part.size(), params.beta);
      EXPECT_TRUE(std::any_of(c.xi0.begin(), c.xi0.end(), [](const EtaResult& r) { return r.has_value(); }));
      // Antisymmetry, recomputed from the blocks rather than through delta().
      for (std::size_t k = 1; k <= params.beta; ++k) {
        const auto ord = compare_bits(block(w.bits(), params, 2, k), block(v.bits(), params, 2, k));
        const int reversed = ord < 0 ? 1 : ord > 0 ? -1 : 0;
        EXPECT_EQ(delta(k, v, w, params), -reversed);
      }
      EXPECT_EQ(psi(w, v, params), c);
    }
}
