#include <gtest/gtest.h>

#include "parity_ramsey/params.hpp"
#include "parity_ramsey/vertex.hpp"

using namespace parity_ramsey;

TEST(Params, BetaTwo) {
  const auto p = derive_params(2);
  EXPECT_EQ(p.alpha, 8u);
  EXPECT_EQ(p.r, (std::array<std::size_t, 4>{1, 2, 4, 8}));
  EXPECT_EQ(p.a, (std::array<std::size_t, 4>{8, 4, 2, 1}));
}

TEST(Params, BetaThree) {
  const auto p = derive_params(3);
  EXPECT_EQ(p.alpha, 27u);
  EXPECT_EQ(p.r, (std::array<std::size_t, 4>{1, 3, 9, 27}));
  EXPECT_EQ(p.a, (std::array<std::size_t, 4>{27, 9, 3, 1}));
}

TEST(Params, RejectsDegenerateBeta) {
  EXPECT_THROW(derive_params(1), InvalidParameter);
  EXPECT_THROW(derive_params(0), InvalidParameter);
}

TEST(Params, Invariants) {
  for (std::size_t beta = 2; beta <= 6; ++beta) {
    const auto p = derive_params(beta);
    EXPECT_EQ(p.alpha, beta * beta * beta);
    EXPECT_EQ(p.r[3], p.alpha);
    EXPECT_EQ(p.a[3], 1u);
    EXPECT_EQ(p.r[0], 1u);
    EXPECT_EQ(p.a[0], p.alpha);
    for (std::size_t d = 0; d < 4; ++d) EXPECT_EQ(p.r[d] * p.a[d], p.alpha);
  }
}

TEST(Vertex, ParseAndPrint) {
  const auto p = derive_params(2);
  const auto v = Vertex::parse("00010000", p);
  EXPECT_EQ(v.str(), "00010000");
  EXPECT_EQ(v.size(), 8u);
  EXPECT_THROW(Vertex::parse("0001000", p), ShapeError);
  EXPECT_THROW(Vertex::parse("0001000x", p), ShapeError);
}

TEST(Vertex, LexOrderIsMsbFirst) {
  const auto p = derive_params(2);
  EXPECT_LT(Vertex::parse("01111111", p), Vertex::parse("10000000", p));
  EXPECT_LT(Vertex::parse("00000000", p), Vertex::parse("00000001", p));
  for (std::uint64_t i = 0; i + 1 < 256; ++i) EXPECT_LT(Vertex::from_index(i, 8), Vertex::from_index(i + 1, 8));
}

TEST(Vertex, LexFirstEnumeration) {
  const auto p = derive_params(2);
  const auto vs = enumerate_vertices(p, 3, VertexMode::LexFirst);
  ASSERT_EQ(vs.size(), 3u);
  EXPECT_EQ(vs[0].str(), "00000000");
  EXPECT_EQ(vs[1].str(), "00000001");
  EXPECT_EQ(vs[2].str(), "00000010");
}

TEST(Vertex, FullUniverse) {
  const auto p = derive_params(2);
  const auto vs = enumerate_vertices(p, 256, VertexMode::LexFirst);
  std::set<std::string> seen;
  for (const auto& v : vs) seen.insert(v.str());
  EXPECT_EQ(seen.size(), 256u);
  EXPECT_THROW(enumerate_vertices(p, 257, VertexMode::LexFirst), CapacityError);
}

TEST(Vertex, SeededRandomIsReproducible) {
  const auto p = derive_params(3);
  const auto a = enumerate_vertices(p, 100, VertexMode::SeededRandom, 42);
  const auto b = enumerate_vertices(p, 100, VertexMode::SeededRandom, 42);
  const auto c = enumerate_vertices(p, 100, VertexMode::SeededRandom, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(std::adjacent_find(a.begin(), a.end()), a.end());
  for (const auto& v : a) EXPECT_EQ(v.size(), 27u);
}

TEST(Vertex, SeededRandomCanExhaustSmallUniverse) {
  const auto p = derive_params(2);
  const auto a = enumerate_vertices(p, 256, VertexMode::SeededRandom, 5);
  EXPECT_EQ(a, enumerate_vertices(p, 256, VertexMode::LexFirst));
}
