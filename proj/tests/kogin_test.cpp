#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sashiko/errors.hpp"
#include "sashiko/kogin.hpp"

namespace sashiko::kogin {
namespace {

KoginChart chart_of(std::vector<std::vector<kogin::Run>> rows, int width, ParityMode mode) {
  KoginChart c;
  c.width = width;
  c.mode = mode;
  c.name = "test";
  for (auto& r : rows) c.rows.push_back({std::move(r)});
  return c;
}

TEST(ParseRow, Transliterates) {
  EXPECT_EQ(parse_row("-.---.-").runs, (std::vector<kogin::Run>{{0, 1}, {2, 3}, {6, 1}}));
  EXPECT_TRUE(parse_row("....").runs.empty());
  EXPECT_EQ(emit_row(parse_row("-.---.-"), 7), "-.---.-");
  EXPECT_THROW(parse_row("-x-"), ParseError);
}

TEST(Validate, StrictKogin) {
  const auto ok = chart_of({{{0, 1}, {2, 3}}, {{0, 5}}}, 7, ParityMode::kogin);
  EXPECT_TRUE(validate(ok).ok());

  const auto even = chart_of({{{0, 1}, {2, 2}}}, 7, ParityMode::kogin);
  const auto report = validate(even);
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0], (Violation{0, 1, ViolationKind::wrong_parity, 2}));
  EXPECT_EQ(report.violations[1].kind, ViolationKind::length_not_allowed);

  const auto seven = chart_of({{{0, 7}}}, 9, ParityMode::kogin);
  EXPECT_FALSE(validate(seven, true).ok());
  EXPECT_TRUE(validate(seven, false).ok());
}

TEST(Validate, HishiWantsEven) {
  const auto four = chart_of({{{0, 4}}}, 6, ParityMode::hishi);
  EXPECT_TRUE(validate(four).ok());
  auto as_kogin = four;
  as_kogin.mode = ParityMode::kogin;
  EXPECT_FALSE(validate(as_kogin, false).ok());
  const auto three = chart_of({{{0, 3}}}, 6, ParityMode::hishi);
  EXPECT_FALSE(validate(three).ok());
}

TEST(Validate, StructuralProblemsAreViolations) {
  const auto touching = chart_of({{{0, 1}, {1, 1}}}, 5, ParityMode::kogin);
  EXPECT_EQ(validate(touching).violations.at(0).kind, ViolationKind::touching);
  const auto wide = chart_of({{{3, 3}}}, 5, ParityMode::kogin);
  EXPECT_EQ(validate(wide).violations.at(0).kind, ViolationKind::out_of_bounds);
  const auto zero = chart_of({{{0, 0}}}, 5, ParityMode::kogin);
  EXPECT_EQ(validate(zero).violations.at(0).kind, ViolationKind::bad_length);
}

TEST(Validate, SoundAgainstNaiveCheck) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int width = 5 + static_cast<int>(rng() % 20);
    KoginChart c;
    c.width = width;
    c.mode = ParityMode::kogin;
    const int rows = 1 + static_cast<int>(rng() % 6);
    for (int r = 0; r < rows; ++r) {
      std::string row;
      for (int i = 0; i < width; ++i) row.push_back(rng() % 3 ? '-' : '.');
      c.rows.push_back(parse_row(row));
    }
    bool all_odd = true;
    for (const auto& row : c.rows) {
      for (const auto& run : row.runs) all_odd = all_odd && run.length % 2 == 1;
    }
    EXPECT_EQ(validate(c, false).ok(), all_odd);
  }
}

TEST(ParseChart, HeaderAndRows) {
  const auto c = parse_chart("# note\nwidth=7 mode=kogin name=demo\n-.---.-\n..-.-..  \n");
  EXPECT_EQ(c.width, 7);
  EXPECT_EQ(c.mode, ParityMode::kogin);
  EXPECT_EQ(c.name, "demo");
  ASSERT_EQ(c.rows.size(), 2u);
  EXPECT_EQ(c.rows[0].runs, (std::vector<kogin::Run>{{0, 1}, {2, 3}, {6, 1}}));
  EXPECT_EQ(emit_chart(c), "width=7 mode=kogin name=demo\n-.---.-\n..-.-..\n");
  EXPECT_EQ(parse_chart(emit_chart(c)), c);
}

TEST(ParseChart, Errors) {
  EXPECT_THROW(parse_chart("width=3 mode=kogin name=a\n---\n----\n"), WidthMismatchError);
  try {
    parse_chart("width=3 mode=kogin name=a\n-x-\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(parse_chart("width=3 mode=sashiko name=a\n---\n"), ParseError);
  EXPECT_THROW(parse_chart("width=x mode=kogin name=a\n---\n"), ParseError);
  EXPECT_THROW(parse_chart("mode=kogin name=a\n---\n"), ParseError);
  EXPECT_THROW(parse_chart("width=3 mode=kogin name=a\n"), ParseError);
  EXPECT_THROW(parse_chart(""), ParseError);
}

TEST(Motif, BundledMotifsValidateAndMirror) {
  EXPECT_EQ(motif_names(), (std::vector<std::string>{"gourd", "butterfly", "dragonfly",
                                                     "kikurako"}));
  for (const auto& n : motif_names()) {
    const auto c = motif(n);
    EXPECT_EQ(c.name, n);
    EXPECT_EQ(c.mode, ParityMode::kogin);
    EXPECT_TRUE(validate(c, true).ok()) << n << "\n" << validate(c).to_text();
    EXPECT_TRUE(has_vertical_mirror(c)) << n;
    EXPECT_EQ(c.width % 2, 1) << n;
    for (const auto& row : c.rows) {
      for (const auto& run : row.runs) EXPECT_EQ(run.length % 2, 1) << n;
    }
    // Normalized round trip.
    const auto text = emit_chart(c);
    EXPECT_EQ(parse_chart(text), c);
    EXPECT_EQ(emit_chart(parse_chart(text)), text);
  }
}

TEST(Motif, UnknownNameListsValidOnes) {
  try {
    motif("asanoha");
    FAIL();
  } catch (const UnknownMotifError& e) {
    EXPECT_NE(std::string(e.what()).find("dragonfly"), std::string::npos);
  }
}

TEST(Motif, MirrorDetection) {
  EXPECT_FALSE(has_vertical_mirror(parse_chart("width=5 mode=kogin name=a\n-.-..\n")));
  EXPECT_TRUE(has_vertical_mirror(parse_chart("width=5 mode=kogin name=a\n-.-.-\n")));
}

TEST(ChartStats, DragonflyCounts) {
  const auto st = chart_stats(motif("dragonfly"));
  EXPECT_EQ(st.rows, 12u);
  EXPECT_EQ(st.runs, 21u);
  std::size_t threads = 0;
  for (auto [len, count] : st.length_hist) threads += static_cast<std::size_t>(len) * count;
  EXPECT_EQ(threads, st.stitched_threads);
}

}  // namespace
}  // namespace sashiko::kogin
