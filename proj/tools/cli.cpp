#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace sashiko::cli {

namespace {

constexpr const char* kFooter =
    "Bitstrings list line 0 first: the bottom row for --rows and the leftmost column\n"
    "for --cols. Bit 0 puts a line's first stitch on the front, bit 1 on the back.\n"
    "Exit codes: 0 ok, 1 domain error, 2 usage error, 3 file error.";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

template <class T>
std::optional<T> to_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

int require_length(std::optional<int> len, const std::string& value) {
  if (!len) {
    throw UsageError("shorthand '" + value + "' needs a length (e.g. '" + value +
                     ":8') or --lines");
  }
  if (*len < 1) throw UsageError("length must be >= 1 in '" + value + "'");
  return *len;
}

// Splits "a=1,b=2" into a map; throws UsageError on malformed input.
std::map<std::string, std::string> key_values(std::string_view s, const std::string& whole) {
  std::map<std::string, std::string> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const auto item = s.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("expected key=value in '" + whole + "'");
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
  }
  return out;
}

}  // namespace

std::string fibonacci_word(int length) {
  std::string prev = "1";
  std::string cur = "10";
  if (length <= 1) return prev.substr(0, std::max(length, 0));
  while (static_cast<int>(cur.size()) < length) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.substr(0, length);
}

BitWord expand_word(const std::string& value, std::optional<int> default_length) {
  const auto colon = value.find(':');
  const std::string head = value.substr(0, colon);
  const std::string_view tail =
      colon == std::string::npos ? std::string_view{} : std::string_view(value).substr(colon + 1);

  auto explicit_length = [&]() -> std::optional<int> {
    if (colon == std::string::npos) return default_length;
    auto len = to_number<int>(tail);
    if (!len) throw UsageError("bad length in '" + value + "'");
    return len;
  };

  std::string bits;
  if (head == "zeros" || head == "ones") {
    bits.assign(require_length(explicit_length(), value), head == "ones" ? '1' : '0');
  } else if (head == "alternating") {
    const int len = require_length(explicit_length(), value);
    for (int i = 0; i < len; ++i) bits.push_back(i % 2 ? '1' : '0');
  } else if (head == "fibword") {
    if (colon == std::string::npos) throw UsageError("fibword needs a length, e.g. fibword:8");
    bits = fibonacci_word(require_length(explicit_length(), value));
  } else if (head == "random") {
    auto kv = key_values(tail, value);
    if (!kv.count("p") || !kv.count("seed")) {
      throw UsageError("random shorthand needs p=<float> and seed=<int>: '" + value + "'");
    }
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(kv["p"], &used);
      if (used != kv["p"].size()) throw std::invalid_argument("p");
    } catch (const std::exception&) {
      throw UsageError("bad probability in '" + value + "'");
    }
    if (!(p >= 0 && p <= 1)) throw UsageError("p must be in [0, 1] in '" + value + "'");
    auto seed = to_number<std::uint64_t>(kv["seed"]);
    if (!seed) throw UsageError("bad seed in '" + value + "'");
    std::optional<int> len = default_length;
    if (kv.count("len")) {
      len = to_number<int>(kv["len"]);
      if (!len) throw UsageError("bad len in '" + value + "'");
    }
    for (const auto& [k, v] : kv) {
      if (k != "p" && k != "seed" && k != "len") {
        throw UsageError("unknown key '" + k + "' in '" + value + "'");
      }
    }
    const int n = require_length(len, value);
    std::mt19937_64 engine(*seed);
    for (int i = 0; i < n; ++i) {
      // Top 53 bits as a uniform double in [0, 1).
      const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      bits.push_back(u < p ? '1' : '0');
    }
  } else {
    try {
      return BitWord::parse(value);
    } catch (const ParseError&) {
      throw UsageError("'" + value + "' is not a bitstring or a known generator");
    }
  }
  return BitWord::parse(bits);
}

Polyomino parse_target(const std::string& value) {
  if (value == "monomino" || value == "square") return polyominoes::monomino();
  if (value == "plus" || value == "cross") return polyominoes::plus();
  if (value.rfind("snowflake:", 0) == 0) {
    auto k = to_number<int>(std::string_view(value).substr(10));
    if (!k) throw UsageError("bad snowflake order in '" + value + "'");
    return build_snowflake(*k).polyomino;
  }
  if (value.rfind("cells:", 0) == 0) {
    try {
      return parse_cells(std::string_view(value).substr(6));
    } catch (const ParseError& e) {
      throw UsageError("bad --target: " + std::string(e.what()));
    }
  }
  throw UsageError("unknown --target '" + value +
                   "' (use monomino, plus, snowflake:<k> or cells:x,y;...)");
}

namespace {

struct DesignFlags {
  std::string rows;
  std::string cols;
  std::string pattern;
  int lines = 0;

  void add_to(CLI::App* app) {
    app->add_option("--rows", rows, "Row phase bits (bitstring or generator shorthand)");
    app->add_option("--cols", cols, "Column phase bits (bitstring or generator shorthand)");
    app->add_option("--pattern", pattern, "Pattern file with rows= and cols= lines");
    app->add_option("--lines", lines, "Default length for generator shorthands")
        ->check(CLI::PositiveNumber);
  }

  DesignSpec resolve() const {
    if (!pattern.empty()) {
      if (!rows.empty() || !cols.empty()) {
        throw UsageError("--pattern cannot be combined with --rows/--cols");
      }
      const auto text = read_file(pattern);
      try {
        return parse_pattern(text);
      } catch (const ParseError& e) {
        throw IoError("'" + pattern + "': " + e.what());
      }
    }
    if (rows.empty()) throw UsageError("missing --rows (or --pattern)");
    if (cols.empty()) throw UsageError("missing --cols (or --pattern)");
    std::optional<int> len;
    if (lines > 0) len = lines;
    return {expand_word(rows, len), expand_word(cols, len)};
  }
};

struct RenderFlags {
  std::string side = "front";
  bool mirror_back = false;
  std::string stage = "combined";
  bool grid = false;
  double cell_size = RenderOptions{}.cell_size;
  bool plain_ascii = false;

  void add_to(CLI::App* app, bool design) {
    app->add_option("--cell-size", cell_size, "Output units per thread")
        ->check(CLI::PositiveNumber);
    app->add_flag("--grid", grid, "Draw the thread grid");
    if (!design) return;
    app->add_option("--side", side, "front or back")->check(CLI::IsMember({"front", "back"}));
    app->add_flag("--mirror-back", mirror_back, "Mirror the back side as seen when turned over");
    app->add_option("--stage", stage, "vertical, horizontal or combined")
        ->check(CLI::IsMember({"vertical", "horizontal", "combined"}));
    app->add_flag("--plain-ascii", plain_ascii, "Use - | + instead of box-drawing glyphs");
  }

  RenderOptions resolve() const {
    RenderOptions o;
    o.cell_size = cell_size;
    o.show_grid = grid;
    o.side = side == "back" ? Side::back : Side::front;
    o.mirror_back = mirror_back;
    o.stage = stage == "vertical"     ? Stage::VerticalOnly
              : stage == "horizontal" ? Stage::HorizontalOnly
                                      : Stage::Combined;
    o.plain_ascii = plain_ascii;
    return o;
  }
};

struct ChartFlags {
  std::string motif;
  std::string chart;

  void add_to(CLI::App* app) {
    app->add_option("--motif", motif, "Bundled motif name (see motif-list)");
    app->add_option("--chart", chart, "Chart file");
  }

  kogin::KoginChart resolve() const {
    if (!motif.empty() && !chart.empty()) throw UsageError("give --motif or --chart, not both");
    if (!motif.empty()) return kogin::motif(motif);
    if (chart.empty()) throw UsageError("missing --motif or --chart");
    const auto text = read_file(chart);
    try {
      return kogin::parse_chart(text);
    } catch (const ParseError& e) {
      throw IoError("'" + chart + "': " + e.what());
    }
  }
};

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Hitomezashi and kogin sashiko pattern tool", "sashiko"};
  app.footer(kFooter);
  app.require_subcommand(1, 1);

  Command cmd;
  DesignFlags design;
  RenderFlags render;
  ChartFlags chart;
  std::string out;
  std::string format;
  int m = 0;
  int n = 0;
  unsigned cap_bits = kDefaultCapBits;
  unsigned threads = 0;
  std::string mode = "exhaustive";
  std::uint64_t count = 0;
  std::optional<std::uint64_t> seed;
  std::string target;
  bool lenient = false;

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Vertical (column) line count")->required();
    sub->add_option("--n", n, "Horizontal (row) line count")->required();
    sub->add_option("--cap-bits", cap_bits, "Refuse to enumerate more than 2^cap designs")
        ->check(CLI::Range(1u, 63u));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out, "Write output to a file"); };

  auto* generate = app.add_subcommand("generate", "Render a design");
  design.add_to(generate);
  render.add_to(generate, true);
  generate->add_option("--format", format, "svg, ascii or corners")
      ->check(CLI::IsMember({"svg", "ascii", "corners"}));
  add_out(generate);

  auto* dual = app.add_subcommand("dual", "The reverse-side design");
  design.add_to(dual);
  render.add_to(dual, true);
  dual->add_option("--format", format, "pattern, svg or ascii")
      ->check(CLI::IsMember({"pattern", "svg", "ascii"}));
  add_out(dual);

  auto* decompose_cmd = app.add_subcommand("decompose", "List loops and paths");
  design.add_to(decompose_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "Loop and path statistics");
  design.add_to(stats_cmd);
  stats_cmd->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* symmetry = app.add_subcommand("symmetry", "Symmetries of the front");
  design.add_to(symmetry);

  auto* enumerate = app.add_subcommand("enumerate", "List every design of a size");
  add_shape(enumerate);
  add_out(enumerate);

  auto* census_cmd = app.add_subcommand("census", "Per-design statistics as CSV");
  add_shape(census_cmd);
  census_cmd->add_option("--mode", mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  census_cmd->add_option("--count", count, "Sample size");
  census_cmd->add_option("--seed", seed, "Sampling seed (required for sample mode)");
  census_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  census_cmd->add_flag("--aggregates", cmd.aggregates, "Print histograms instead of rows");
  add_out(census_cmd);

  auto* find = app.add_subcommand("find", "Designs whose loops enclose a polyomino");
  add_shape(find);
  find->add_option("--target", target, "monomino, plus, snowflake:<k> or cells:x,y;...")
      ->required();
  find->add_flag("--symmetric", cmd.up_to_symmetry, "Match up to rotation and reflection");
  find->add_flag("--up-to", cmd.all_sizes, "Search every size from 2x2 lines to m x n");
  find->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_out(find);

  auto* snowflake = app.add_subcommand("snowflake", "Fibonacci snowflake outline");
  snowflake->add_option("--order", cmd.order, "Snowflake order")->required();
  snowflake->add_option("--format", format, "steps, turns, cells or svg")
      ->check(CLI::IsMember({"steps", "turns", "cells", "svg"}));
  render.add_to(snowflake, false);
  add_out(snowflake);

  auto* kvalidate = app.add_subcommand("kogin-validate", "Check chart run lengths");
  chart.add_to(kvalidate);
  kvalidate->add_flag("--lenient", lenient, "Kogin: allow any odd length, not just 1, 3, 5");

  auto* krender = app.add_subcommand("kogin-render", "Render a chart");
  chart.add_to(krender);
  render.add_to(krender, false);
  krender->add_option("--format", format, "svg or text")->check(CLI::IsMember({"svg", "text"}));
  add_out(krender);

  auto* motifs = app.add_subcommand("motif-list", "List bundled kogin motifs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Error& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream help, ignored;
      app.exit(e, help, ignored);
      throw HelpRequested{help.str()};
    }
    throw UsageError(e.what());
  }

  const std::map<CLI::App*, CommandKind> kinds = {
      {generate, CommandKind::generate},         {dual, CommandKind::dual},
      {decompose_cmd, CommandKind::decompose},   {stats_cmd, CommandKind::stats},
      {symmetry, CommandKind::symmetry},         {enumerate, CommandKind::enumerate},
      {census_cmd, CommandKind::census},         {find, CommandKind::find},
      {snowflake, CommandKind::snowflake},       {kvalidate, CommandKind::kogin_validate},
      {krender, CommandKind::kogin_render},      {motifs, CommandKind::motif_list},
  };
  for (const auto& [sub, kind] : kinds) {
    if (app.got_subcommand(sub)) cmd.kind = kind;
  }

  cmd.render = render.resolve();
  cmd.format = format;
  if (!out.empty()) cmd.out = out;
  cmd.m = m;
  cmd.n = n;
  cmd.cap_bits = cap_bits;
  cmd.threads = threads;
  cmd.strict = !lenient;

  switch (cmd.kind) {
    case CommandKind::generate:
    case CommandKind::dual:
    case CommandKind::decompose:
    case CommandKind::stats:
    case CommandKind::symmetry:
      cmd.spec = design.resolve();
      break;
    case CommandKind::census:
      if (mode == "sample") {
        if (!seed) throw UsageError("--seed is required with --mode sample");
        if (count == 0) throw UsageError("--count must be given and positive with --mode sample");
        cmd.census_mode = Sample{count, *seed};
      } else if (seed || count) {
        throw UsageError("--count/--seed only apply to --mode sample");
      }
      break;
    case CommandKind::find:
      cmd.target = parse_target(target);
      break;
    case CommandKind::kogin_validate:
    case CommandKind::kogin_render:
      cmd.chart = chart.resolve();
      break;
    default:
      break;
  }
  return cmd;
}

namespace {

void emit(const Command& cmd, std::ostream& out, const std::string& text) {
  if (!cmd.out) {
    out << text;
    return;
  }
  std::ofstream file(*cmd.out, std::ios::binary);
  if (!file) throw IoError("cannot write '" + *cmd.out + "'");
  file << text;
  if (!file) throw IoError("error writing '" + *cmd.out + "'");
}

std::string where(Vertex v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string spec_line(const DesignSpec& s) { return s.rows.str() + " " + s.cols.str() + "\n"; }

std::string decomposition_text(const Decomposition& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.loops.size(); ++i) {
    const auto& l = d.loops[i];
    os << "loop " << i << " start=" << where(l.vertices.front()) << " edges=" << l.edges.size()
       << " area=" << l.area() << " depth=" << d.depth(i)
       << " parent=" << (d.parent[i] ? std::to_string(*d.parent[i]) : "-") << '\n';
  }
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    const auto& p = d.paths[i];
    os << "path " << i << " from=" << where(p.front()) << " to=" << where(p.back())
       << " edges=" << p.edges.size() << '\n';
  }
  return os.str();
}

std::string stats_text(const StatsRecord& r) {
  std::ostringstream os;
  os << "loops=" << r.loops << "\npaths=" << r.paths << "\nmax_depth=" << r.max_depth
     << "\nh_edges=" << r.h_edges << "\nv_edges=" << r.v_edges << "\narea_hist=";
  bool first = true;
  for (auto [a, c] : r.area_hist) {
    os << (first ? "" : ";") << a << ':' << c;
    first = false;
  }
  os << '\n';
  return os.str();
}

std::string symmetry_text(const SymmetryReport& r) {
  std::string ops;
  for (auto op : r.ops) ops += (ops.empty() ? "" : ",") + std::string(name(op));
  return "ops=" + ops + "\npoint_group=" + std::string(name(r.point_group)) +
         "\nrow_period=" + std::to_string(r.row_period) +
         "\ncol_period=" + std::to_string(r.col_period) + "\n";
}

}  // namespace

int run(const Command& cmd, std::ostream& out) {
  switch (cmd.kind) {
    case CommandKind::generate: {
      const auto design = build_design(*cmd.spec);
      if (cmd.format == "ascii") {
        emit(cmd, out, render_design_ascii(design, cmd.render));
      } else if (cmd.format == "corners") {
        emit(cmd, out, corner_map(design).to_text());
      } else {
        emit(cmd, out, render_design_svg(design, cmd.render));
      }
      return kOk;
    }
    case CommandKind::dual: {
      const auto back = back_of(build_design(*cmd.spec));
      auto opts = cmd.render;
      opts.side = Side::front;
      if (cmd.format == "svg") {
        emit(cmd, out, render_design_svg(back, opts));
      } else if (cmd.format == "ascii") {
        emit(cmd, out, render_design_ascii(back, opts));
      } else {
        emit(cmd, out, emit_pattern(back.spec()));
      }
      return kOk;
    }
    case CommandKind::decompose:
      out << decomposition_text(decompose(build_design(*cmd.spec)));
      return kOk;
    case CommandKind::stats: {
      const auto r = stats(build_design(*cmd.spec));
      out << (cmd.format == "csv" ? stats_csv_header() + "\n" + to_csv_row(r) + "\n"
                                  : stats_text(r));
      return kOk;
    }
    case CommandKind::symmetry:
      out << symmetry_text(detect_symmetry(build_design(*cmd.spec)));
      return kOk;
    case CommandKind::enumerate: {
      std::string text;
      for (const auto& s : enumerate_designs(cmd.m, cmd.n, cmd.cap_bits)) text += spec_line(s);
      emit(cmd, out, text);
      return kOk;
    }
    case CommandKind::census: {
      const auto table =
          census(cmd.m, cmd.n, cmd.census_mode, {.cap_bits = cmd.cap_bits, .threads = cmd.threads});
      emit(cmd, out, cmd.aggregates ? table.aggregates_csv() : table.to_csv());
      return kOk;
    }
    case CommandKind::find: {
      FindOptions opts;
      opts.cap_bits = cmd.cap_bits;
      opts.threads = cmd.threads;
      opts.up_to_symmetry = cmd.up_to_symmetry;
      const auto found = cmd.all_sizes
                             ? find_designs_containing_up_to(cmd.target, cmd.m, cmd.n, opts)
                             : find_designs_containing(cmd.target, cmd.m, cmd.n, opts);
      std::string text;
      for (const auto& s : found) text += spec_line(s);
      emit(cmd, out, text);
      return kOk;
    }
    case CommandKind::snowflake: {
      const auto s = build_snowflake(cmd.order);
      if (cmd.format == "svg") {
        emit(cmd, out, render_path_svg(s.vertices, cmd.render));
      } else if (cmd.format == "turns") {
        emit(cmd, out, turn_word(turn_word_index(cmd.order)).str() + "\n");
      } else if (cmd.format == "cells") {
        emit(cmd, out, s.polyomino.to_text());
      } else {
        emit(cmd, out, s.step_string() + "\n");
      }
      return kOk;
    }
    case CommandKind::kogin_validate: {
      const auto report = kogin::validate(*cmd.chart, cmd.strict);
      out << report.to_text();
      return report.ok() ? kOk : kDomainError;
    }
    case CommandKind::kogin_render:
      emit(cmd, out,
           cmd.format == "text" ? render_chart_text(*cmd.chart)
                                : render_chart_svg(*cmd.chart, cmd.render));
      return kOk;
    case CommandKind::motif_list: {
      std::string text;
      for (const auto& name : kogin::motif_names()) text += name + "\n";
      out << text;
      return kOk;
    }
  }
  return kOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsageError;
  } catch (const IoError& e) {
    err << "file error: " << e.what() << "\n";
    return kIoError;
  } catch (const sashiko::Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  try {
    return run(cmd, out);
  } catch (const IoError& e) {
    err << "file error: " << e.what() << "\n";
    return kIoError;
  } catch (const sashiko::Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace sashiko::cli
