#pragma once

// Counted-thread charts: each row is a set of horizontal runs over a thread
// grid. Kogin work uses odd run lengths and hishi work even ones.
//
// Chart text:
//   # optional comment lines
//   width=<int> mode=<kogin|hishi> name=<label>
//   -.---.-        one row per line, top row first; '-' stitched, '.' skipped

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sashiko::kogin {

enum class ParityMode { kogin, hishi };
std::string_view name(ParityMode mode);

struct Run {
  int start = 0;
  int length = 1;

  bool operator==(const Run&) const = default;
};

struct ChartRow {
  std::vector<Run> runs;

  bool operator==(const ChartRow&) const = default;
};

struct KoginChart {
  int width = 0;
  std::vector<ChartRow> rows;
  ParityMode mode = ParityMode::kogin;
  std::string name;

  std::size_t run_count() const;
  bool operator==(const KoginChart&) const = default;
};

enum class ViolationKind {
  wrong_parity,        // length parity does not match the mode
  length_not_allowed,  // strict kogin: length outside {1, 3, 5}
  bad_length,          // length < 1
  out_of_bounds,       // run extends past the chart width
  touching,            // overlaps or abuts the previous run
};
std::string_view name(ViolationKind kind);

struct Violation {
  std::size_t row = 0;  // 0-based, top row first
  std::size_t run = 0;  // index within the row
  ViolationKind kind = ViolationKind::wrong_parity;
  int length = 0;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  // One line per violation, or "ok".
  std::string to_text() const;
};

// Strict kogin additionally restricts lengths to {1, 3, 5}. Strictness has
// no effect in hishi mode.
ValidationReport validate(const KoginChart& chart, bool strict = true);

ChartRow parse_row(std::string_view text);
std::string emit_row(const ChartRow& row, int width);

// Throws ParseError (with line/column) or WidthMismatchError.
KoginChart parse_chart(std::string_view text);
// Header plus rows, '\n' terminated, no comments or trailing whitespace.
std::string emit_chart(const KoginChart& chart);

// Each row reads the same reversed (mirror about the centre column).
bool has_vertical_mirror(const KoginChart& chart);

struct ChartStats {
  std::size_t rows = 0;
  std::size_t runs = 0;
  std::size_t stitched_threads = 0;
  std::map<int, std::size_t> length_hist;
};
ChartStats chart_stats(const KoginChart& chart);

std::vector<std::string> motif_names();
// Throws UnknownMotifError naming the valid motifs.
KoginChart motif(std::string_view name);
// The motif's bundled file text, comments included.
std::string_view motif_source(std::string_view name);

}  // namespace sashiko::kogin
