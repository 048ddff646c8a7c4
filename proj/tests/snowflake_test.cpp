#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sashiko/enumerate.hpp"
#include "sashiko/errors.hpp"
#include "sashiko/snowflake.hpp"

namespace sashiko {
namespace {

TEST(OddFibonacci, MatchesFilteredSequence) {
  const auto want = oracle::odd_fibonacci_prefix(20);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(odd_fibonacci(k), want[k]) << k;
  EXPECT_EQ(odd_fibonacci(0), 1u);
  EXPECT_EQ(odd_fibonacci(1), 3u);
  EXPECT_EQ(odd_fibonacci(2), 5u);
  EXPECT_EQ(odd_fibonacci(3), 13u);
  EXPECT_EQ(odd_fibonacci(4), 21u);
  EXPECT_EQ(odd_fibonacci(6), 89u);
}

TEST(OddFibonacci, Errors) {
  EXPECT_THROW(odd_fibonacci(-1), DimensionError);
  EXPECT_THROW(odd_fibonacci(1000), OverflowError);
}

TEST(TurnWord, SmallWords) {
  EXPECT_EQ(turn_word(0).str(), "");
  EXPECT_EQ(turn_word(1).str(), "R");
  // n = 2 is the plain concatenation branch: q1 q0.
  EXPECT_EQ(turn_word(2).str(), "R");
  EXPECT_EQ(turn_word(3).str(), "RL");
  EXPECT_EQ(turn_word(4).str(), "RLL");
  EXPECT_EQ(turn_word(5).str(), "RLLRL");
}

TEST(TurnWord, LengthsAreFibonacci) {
  std::uint64_t a = 0, b = 1;
  for (int n = 0; n < 25; ++n) {
    EXPECT_EQ(turn_word(n).size(), a) << n;
    const auto next = a + b;
    a = b;
    b = next;
  }
}

TEST(TurnWord, SwapIsInvolution) {
  for (int n = 0; n < 15; ++n) {
    const auto w = turn_word(n);
    EXPECT_EQ(swap(swap(w)), w);
    if (w.size()) EXPECT_NE(swap(w), w);
  }
}

TEST(Snowflake, FirstOrders) {
  const auto s0 = build_snowflake(0);
  EXPECT_EQ(s0.perimeter(), 4u);
  EXPECT_EQ(s0.polyomino, polyominoes::monomino());

  const auto s1 = build_snowflake(1);
  EXPECT_EQ(s1.perimeter(), 12u);
  EXPECT_EQ(s1.polyomino, polyominoes::plus());
  EXPECT_EQ(s1.polyomino.row_profile(), (std::vector<int>{1, 3, 1}));

  EXPECT_EQ(build_snowflake(2).perimeter(), 20u);
  EXPECT_EQ(build_snowflake(3).perimeter(), 52u);
}

TEST(Snowflake, PerimeterLawAndSimplicity) {
  for (int k = 0; k <= kMaxSnowflakeOrder; ++k) {
    if (k >= 4 && k % 2 == 0) {
      EXPECT_THROW(build_snowflake(k), ConstructionError) << k;
      continue;
    }
    const auto s = build_snowflake(k);
    EXPECT_EQ(s.perimeter(), 4 * odd_fibonacci(k));
    std::set<Vertex> distinct(s.vertices.begin(), s.vertices.end());
    EXPECT_EQ(distinct.size(), s.vertices.size());
    // Net displacement of the step sequence is zero.
    int dx = 0, dy = 0;
    for (char c : s.step_string()) {
      dx += (c == 'E') - (c == 'W');
      dy += (c == 'N') - (c == 'S');
    }
    EXPECT_EQ(dx, 0);
    EXPECT_EQ(dy, 0);
    EXPECT_TRUE(s.polyomino.is_connected());
    std::vector<oracle::Point> poly;
    for (const auto& v : s.vertices) poly.push_back({v.x, v.y});
    EXPECT_EQ(std::llabs(oracle::twice_area(poly)), 2 * static_cast<long long>(s.polyomino.area()));
  }
}

TEST(Snowflake, QuarterTurnSymmetric) {
  for (int k : {0, 1, 2, 3, 5}) {
    const auto p = build_snowflake(k).polyomino;
    EXPECT_EQ(p.transformed(SquareOp::rot90), p) << k;
  }
}

TEST(Snowflake, OrderBounds) {
  EXPECT_THROW(build_snowflake(-1), DimensionError);
  EXPECT_THROW(build_snowflake(kMaxSnowflakeOrder + 1), DimensionError);
}

TEST(IsSnowflake, RecognisesShapes) {
  EXPECT_EQ(is_snowflake(polyominoes::monomino()), 0);
  EXPECT_EQ(is_snowflake(polyominoes::plus()), 1);
  EXPECT_EQ(is_snowflake(polyominoes::domino()), std::nullopt);
  for (int k : {0, 1, 2, 3, 5}) {
    const auto p = build_snowflake(k).polyomino;
    EXPECT_EQ(is_snowflake(p), k);
    EXPECT_EQ(is_snowflake(p.transformed(SquareOp::mirror_diag)), k);
  }
  EXPECT_EQ(is_snowflake(build_snowflake(3).polyomino, 2), std::nullopt);
}

TEST(IsSnowflake, OrderOneIsHitomezashiRealizable) {
  EXPECT_FALSE(find_designs_containing(build_snowflake(1).polyomino, 5, 5).empty());
}

TEST(IsSnowflake, OrderTwoAroundNestedSquare) {
  const auto d = decompose(build_design({BitWord::parse("010010"), BitWord::parse("010010")}));
  ASSERT_EQ(d.loops.size(), 2u);
  EXPECT_EQ(is_snowflake(d.loops[0].polyomino), 2);
  EXPECT_EQ(is_snowflake(d.loops[1].polyomino), 0);
}

TEST(Polyomino, Canonicalization) {
  const Polyomino p({{5, 7}, {6, 7}, {5, 8}});
  EXPECT_EQ(p.cells(), (std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(p.width(), 2);
  EXPECT_EQ(p.height(), 2);
  EXPECT_TRUE(p.equal_up_to_symmetry(p.transformed(SquareOp::rot270)));
  EXPECT_FALSE(p.equal_up_to_symmetry(polyominoes::domino()));
  EXPECT_FALSE(Polyomino({{0, 0}, {2, 0}}).is_connected());
  EXPECT_EQ(polyominoes::plus().to_text(), ".#.\n###\n.#.\n");
}

TEST(Polyomino, TransformsComposeLikeTheSquareGroup) {
  const Polyomino p({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  EXPECT_EQ(p.transformed(SquareOp::rot90).transformed(SquareOp::rot90),
            p.transformed(SquareOp::rot180));
  EXPECT_EQ(p.transformed(SquareOp::mirror_x).transformed(SquareOp::mirror_y),
            p.transformed(SquareOp::rot180));
  std::set<Polyomino> images;
  for (auto op : kSquareOps) images.insert(p.transformed(op));
  EXPECT_EQ(images.size(), 8u);
}

TEST(Polyomino, ParseCells) {
  EXPECT_EQ(parse_cells("1,0;0,1;1,1;2,1;1,2"), polyominoes::plus());
  EXPECT_THROW(parse_cells(""), ParseError);
  EXPECT_THROW(parse_cells("1;2"), ParseError);
  EXPECT_THROW(parse_cells("1,2;"), ParseError);
}

}  // namespace
}  // namespace sashiko
