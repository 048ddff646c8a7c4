#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sashiko/enumerate.hpp"
#include "sashiko/errors.hpp"

namespace sashiko {
namespace {

using oracle::spec;

TEST(EnumerateDesigns, CountsAndDistinctness) {
  for (auto [m, n, want] : {std::tuple{2, 2, 16u}, {3, 2, 32u}, {2, 3, 32u}, {4, 4, 256u}}) {
    std::set<DesignSpec> seen;
    std::size_t count = 0;
    for (const auto& s : enumerate_designs(m, n)) {
      EXPECT_EQ(static_cast<int>(s.cols.size()), m);
      EXPECT_EQ(static_cast<int>(s.rows.size()), n);
      seen.insert(s);
      ++count;
    }
    EXPECT_EQ(count, want);
    EXPECT_EQ(seen.size(), want);
  }
}

TEST(EnumerateDesigns, LexicographicOrder) {
  const auto range = enumerate_designs(3, 2);
  std::vector<DesignSpec> all(range.begin(), range.end());
  EXPECT_EQ(all.front(), spec("00", "000"));
  EXPECT_EQ(all.back(), spec("11", "111"));
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LT(all[i - 1].rows.str() + all[i - 1].cols.str(), all[i].rows.str() + all[i].cols.str());
  }
}

TEST(EnumerateDesigns, IndexRoundTrip) {
  for (std::uint64_t i = 0; i < 128; ++i) EXPECT_EQ(index_of(spec_at(3, 4, i)), i);
}

TEST(EnumerateDesigns, Errors) {
  EXPECT_THROW(enumerate_designs(1, 4), DimensionError);
  EXPECT_THROW(enumerate_designs(13, 12), CapExceededError);
  EXPECT_NO_THROW(enumerate_designs(12, 12));
  EXPECT_NO_THROW(enumerate_designs(13, 12, 25));
  try {
    enumerate_designs(20, 20);
    FAIL();
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.cap_bits(), kDefaultCapBits);
    EXPECT_NE(std::string(e.what()).find("2^24"), std::string::npos);
  }
}

TEST(Census, ExhaustiveTwoByTwo) {
  const auto t = census(2, 2, Exhaustive{});
  EXPECT_EQ(t.rows.size(), 16u);
  const auto csv = t.to_csv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 17);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), stats_csv_header());
  EXPECT_NE(csv.find("\n2,2,00,00,1,0,1,2,2,1,1:1\n"), std::string::npos);
}

TEST(Census, AggregatesAreFoldOfRows) {
  const auto t = census(3, 4, Exhaustive{});
  std::map<std::size_t, std::uint64_t> loops, paths, areas;
  for (const auto& r : t.rows) {
    ++loops[r.loops];
    ++paths[r.paths];
    for (auto [a, c] : r.area_hist) areas[a] += c;
  }
  EXPECT_EQ(t.loop_hist, loops);
  EXPECT_EQ(t.path_hist, paths);
  EXPECT_EQ(t.area_hist, areas);
}

TEST(Census, MatchesNaiveRecount) {
  for (int size : {3, 4}) {
    const auto t = census(size, size, Exhaustive{});
    std::map<std::size_t, std::uint64_t> loops, paths, areas;
    const unsigned total = 1u << (2 * size);
    for (unsigned code = 0; code < total; ++code) {
      std::string rows, cols;
      for (int i = 0; i < size; ++i) rows.push_back('0' + ((code >> (2 * size - 1 - i)) & 1));
      for (int i = 0; i < size; ++i) cols.push_back('0' + ((code >> (size - 1 - i)) & 1));
      std::size_t l = 0, p = 0;
      for (const auto& c : oracle::components(oracle::running_stitch(rows, cols))) {
        if (c.closed) {
          ++l;
          ++areas[oracle::ray_cast_cells(c.edges).size()];
        } else {
          ++p;
        }
      }
      ++loops[l];
      ++paths[p];
      // Rows come out in the same order as the naive enumeration.
      EXPECT_EQ(t.rows[code].rows_bits, rows);
      EXPECT_EQ(t.rows[code].cols_bits, cols);
    }
    EXPECT_EQ(t.loop_hist, loops) << "size " << size;
    EXPECT_EQ(t.path_hist, paths) << "size " << size;
    EXPECT_EQ(t.area_hist, areas) << "size " << size;
  }
}

TEST(Census, DeterministicAcrossThreadCounts) {
  const auto serial = census(4, 4, Exhaustive{}, {.threads = 1}).to_csv();
  const auto parallel = census(4, 4, Exhaustive{}, {.threads = 4}).to_csv();
  EXPECT_EQ(serial, parallel);
}

TEST(Census, SampleIsSeeded) {
  const auto a = census(8, 9, Sample{100, 42}, {.threads = 1}).to_csv();
  const auto b = census(8, 9, Sample{100, 42}, {.threads = 3}).to_csv();
  const auto c = census(8, 9, Sample{100, 43}).to_csv();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(census(8, 9, Sample{100, 42}).rows.size(), 100u);
  // Sampling is allowed beyond the exhaustive cap.
  EXPECT_NO_THROW(census(20, 20, Sample{5, 1}));
  EXPECT_THROW(census(4, 4, Sample{100, 1}, {.cap_bits = 4}), CapExceededError);
}

TEST(Find, MonominoIncludesAllZeros) {
  const auto found = find_designs_containing(polyominoes::monomino(), 2, 2);
  EXPECT_NE(std::find(found.begin(), found.end(), spec("00", "00")), found.end());
  for (const auto& s : found) {
    EXPECT_TRUE(contains_polyomino(decompose(build_design(s)), polyominoes::monomino(), false));
  }
}

TEST(Find, PlusPentominoIsRealizable) {
  const auto found = find_designs_containing(polyominoes::plus(), 5, 5);
  ASSERT_FALSE(found.empty());
  for (const auto& s : found) {
    EXPECT_TRUE(contains_polyomino(decompose(build_design(s)), polyominoes::plus(), false));
  }
  EXPECT_FALSE(find_designs_containing(polyominoes::plus(), 4, 4).empty());
  EXPECT_TRUE(find_designs_containing(polyominoes::plus(), 3, 3).empty());
}

TEST(Find, DominoNeverAppears) {
  EXPECT_TRUE(
      find_designs_containing_up_to(polyominoes::domino(), 5, 5, {{}, true}).empty());
}

TEST(Find, UpToSymmetryWidensTheMatch) {
  std::optional<Polyomino> asymmetric;
  for (const auto& s : enumerate_designs(6, 6)) {
    for (const auto& loop : decompose(build_design(s)).loops) {
      if (loop.polyomino.transformed(SquareOp::rot90) != loop.polyomino) {
        asymmetric = loop.polyomino;
        break;
      }
    }
    if (asymmetric) break;
  }
  ASSERT_TRUE(asymmetric.has_value());
  const auto rotated = asymmetric->transformed(SquareOp::rot90);
  const auto exact = find_designs_containing(*asymmetric, 6, 6);
  FindOptions sym;
  sym.up_to_symmetry = true;
  const auto loose = find_designs_containing(rotated, 6, 6, sym);
  EXPECT_FALSE(exact.empty());
  for (const auto& s : exact) {
    EXPECT_NE(std::find(loose.begin(), loose.end(), s), loose.end());
  }
}

TEST(Find, UpToOrdersBySize) {
  const auto found = find_designs_containing_up_to(polyominoes::monomino(), 3, 3);
  std::set<DesignSpec> direct;
  for (int m = 2; m <= 3; ++m) {
    for (int n = 2; n <= 3; ++n) {
      for (const auto& s : find_designs_containing(polyominoes::monomino(), m, n)) {
        direct.insert(s);
      }
    }
  }
  EXPECT_EQ(std::set<DesignSpec>(found.begin(), found.end()), direct);
  EXPECT_THROW(find_designs_containing(polyominoes::monomino(), 13, 13), CapExceededError);
}

}  // namespace
}  // namespace sashiko
