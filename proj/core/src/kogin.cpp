#include "sashiko/kogin.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "motif_data.hpp"
#include "sashiko/errors.hpp"

namespace sashiko::kogin {

std::string_view name(ParityMode mode) { return mode == ParityMode::kogin ? "kogin" : "hishi"; }

std::string_view name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::wrong_parity: return "wrong-parity";
    case ViolationKind::length_not_allowed: return "length-not-allowed";
    case ViolationKind::bad_length: return "bad-length";
    case ViolationKind::out_of_bounds: return "out-of-bounds";
    case ViolationKind::touching: return "touching";
  }
  return "?";
}

std::size_t KoginChart::run_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.runs.size();
  return n;
}

std::string ValidationReport::to_text() const {
  if (ok()) return "ok\n";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << "row=" << v.row << " run=" << v.run << " length=" << v.length << " " << name(v.kind)
       << '\n';
  }
  return os.str();
}

ValidationReport validate(const KoginChart& chart, bool strict) {
  ValidationReport report;
  const int want = chart.mode == ParityMode::kogin ? 1 : 0;
  for (std::size_t r = 0; r < chart.rows.size(); ++r) {
    const auto& runs = chart.rows[r].runs;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const auto& run = runs[i];
      auto add = [&](ViolationKind k) { report.violations.push_back({r, i, k, run.length}); };
      if (run.length < 1) {
        add(ViolationKind::bad_length);
        continue;
      }
      if (run.length % 2 != want) add(ViolationKind::wrong_parity);
      if (strict && chart.mode == ParityMode::kogin && run.length != 1 && run.length != 3 &&
          run.length != 5) {
        add(ViolationKind::length_not_allowed);
      }
      if (run.start < 0 || run.start + run.length > chart.width) add(ViolationKind::out_of_bounds);
      if (i > 0 && run.start <= runs[i - 1].start + runs[i - 1].length) {
        add(ViolationKind::touching);
      }
    }
  }
  return report;
}

ChartRow parse_row(std::string_view text) {
  ChartRow row;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '-' && c != '.') {
      throw ParseError(1, i + 1, std::string("expected '-' or '.', got '") + c + "'");
    }
    if (c == '.') continue;
    if (i > 0 && text[i - 1] == '-') {
      ++row.runs.back().length;
    } else {
      row.runs.push_back({static_cast<int>(i), 1});
    }
  }
  return row;
}

std::string emit_row(const ChartRow& row, int width) {
  std::string s(static_cast<std::size_t>(std::max(width, 0)), '.');
  for (const auto& run : row.runs) {
    for (int i = 0; i < run.length; ++i) {
      const int x = run.start + i;
      if (x >= 0 && x < width) s[x] = '-';
    }
  }
  return s;
}

namespace {

std::string_view rtrim(std::string_view s) {
  auto e = s.find_last_not_of(" \t\r");
  return e == std::string_view::npos ? std::string_view{} : s.substr(0, e + 1);
}

void parse_header(std::string_view line, std::size_t line_no, KoginChart& chart) {
  bool have_width = false;
  bool have_mode = false;
  bool have_name = false;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    const auto end = std::min(line.find_first_of(" \t", pos), line.size());
    const auto token = line.substr(pos, end - pos);
    const auto col = pos + 1;
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, col, "expected key=value");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "width") {
      int w = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), w);
      if (ec != std::errc{} || ptr != value.data() + value.size() || w < 1) {
        throw ParseError(line_no, col + eq + 1, "width must be a positive integer");
      }
      chart.width = w;
      have_width = true;
    } else if (key == "mode") {
      if (value == "kogin") {
        chart.mode = ParityMode::kogin;
      } else if (value == "hishi") {
        chart.mode = ParityMode::hishi;
      } else {
        throw ParseError(line_no, col + eq + 1, "mode must be kogin or hishi");
      }
      have_mode = true;
    } else if (key == "name") {
      chart.name = std::string(value);
      have_name = true;
    } else {
      throw ParseError(line_no, col, "unknown header key '" + std::string(key) + "'");
    }
    pos = end;
  }
  if (!have_width) throw ParseError(line_no, 0, "header is missing width=");
  if (!have_mode) throw ParseError(line_no, 0, "header is missing mode=");
  if (!have_name) throw ParseError(line_no, 0, "header is missing name=");
}

}  // namespace

KoginChart parse_chart(std::string_view text) {
  KoginChart chart;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = rtrim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      parse_header(line, line_no, chart);
      header_seen = true;
      continue;
    }
    if (line.size() != static_cast<std::size_t>(chart.width)) {
      throw WidthMismatchError(line_no, chart.width, line.size());
    }
    try {
      chart.rows.push_back(parse_row(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.column(), "expected '-' or '.'");
    }
  }
  if (!header_seen) throw ParseError(line_no, 0, "missing chart header");
  if (chart.rows.empty()) throw ParseError(line_no, 0, "chart has no rows");
  return chart;
}

std::string emit_chart(const KoginChart& chart) {
  std::string out = "width=" + std::to_string(chart.width) + " mode=" +
                    std::string(name(chart.mode)) + " name=" + chart.name + "\n";
  for (const auto& row : chart.rows) {
    out += emit_row(row, chart.width);
    out += '\n';
  }
  return out;
}

bool has_vertical_mirror(const KoginChart& chart) {
  for (const auto& row : chart.rows) {
    const auto s = emit_row(row, chart.width);
    if (!std::equal(s.begin(), s.end(), s.rbegin())) return false;
  }
  return true;
}

ChartStats chart_stats(const KoginChart& chart) {
  ChartStats st;
  st.rows = chart.rows.size();
  for (const auto& row : chart.rows) {
    for (const auto& run : row.runs) {
      ++st.runs;
      st.stitched_threads += static_cast<std::size_t>(std::max(run.length, 0));
      ++st.length_hist[run.length];
    }
  }
  return st;
}

std::vector<std::string> motif_names() {
  std::vector<std::string> names;
  for (const auto& [n, text] : detail::bundled_motifs()) names.emplace_back(n);
  return names;
}

std::string_view motif_source(std::string_view motif_name) {
  for (const auto& [n, text] : detail::bundled_motifs()) {
    if (n == motif_name) return text;
  }
  std::string valid;
  for (const auto& n : motif_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw UnknownMotifError("unknown motif '" + std::string(motif_name) + "' (valid: " + valid +
                          ")");
}

KoginChart motif(std::string_view motif_name) { return parse_chart(motif_source(motif_name)); }

}  // namespace sashiko::kogin
