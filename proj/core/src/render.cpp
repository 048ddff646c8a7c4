#include "sashiko/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sashiko/analysis.hpp"

namespace sashiko {

namespace {

// Fixed three-decimal formatting with trailing zeros removed.
std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class SvgWriter {
 public:
  SvgWriter(double width, double height, const RenderOptions& opts) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
            "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
            num(height) + "\">\n";
    out_ += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + num(width) +
            "\" height=\"" + num(height) + "\" fill=\"" + escape(opts.background) + "\"/>\n";
  }

  void open_group(const std::string& cls, const std::string& attrs) {
    out_ += "<g class=\"" + cls + "\" " + attrs + ">\n";
  }
  void close_group() { out_ += "</g>\n"; }

  void line(const char* cls, double x1, double y1, double x2, double y2) {
    out_ += std::string("<line class=\"") + cls + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) +
            "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) + "\"/>\n";
  }

  void rect(const char* cls, double x, double y, double w, double h) {
    out_ += std::string("<rect class=\"") + cls + "\" x=\"" + num(x) + "\" y=\"" + num(y) +
            "\" width=\"" + num(w) + "\" height=\"" + num(h) + "\"/>\n";
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  std::string out_;
};

std::string stroke_attrs(const RenderOptions& opts) {
  return "stroke=\"" + escape(opts.stroke) + "\" stroke-width=\"" +
         num(opts.cell_size * opts.stroke_width_fraction) + "\" stroke-linecap=\"round\"";
}

}  // namespace

void check(const RenderOptions& opts) {
  if (!(opts.cell_size > 0)) throw std::invalid_argument("cell_size must be > 0");
  if (!(opts.gap_fraction >= 0 && opts.gap_fraction < 0.5)) {
    throw std::invalid_argument("gap_fraction must be in [0, 0.5)");
  }
}

StitchSet rendered_stitches(const Design& design, const RenderOptions& opts) {
  const Design side = opts.side == Side::back ? back_of(design) : design;
  auto stitches = stitch_stage(side, opts.stage);
  if (opts.side == Side::back && opts.mirror_back) {
    stitches = transform(stitches, SquareOp::mirror_x);
  }
  return stitches;
}

std::string render_stitches_svg(const StitchSet& stitches, const RenderOptions& opts) {
  check(opts);
  const double c = opts.cell_size;
  const double margin = c;
  const int w = stitches.width();
  const int h = stitches.height();
  // Lattice (x, y) with y up to SVG user space with y down.
  auto sx = [&](double x) { return margin + x * c; };
  auto sy = [&](double y) { return margin + (h - y) * c; };

  SvgWriter svg(2 * margin + w * c, 2 * margin + h * c, opts);
  if (opts.show_grid) {
    svg.open_group("grid", "stroke=\"" + escape(opts.stroke) +
                               "\" stroke-opacity=\"0.25\" stroke-width=\"" + num(c * 0.02) +
                               "\"");
    for (int x = 0; x <= w; ++x) svg.line("grid", sx(x), sy(0), sx(x), sy(h));
    for (int y = 0; y <= h; ++y) svg.line("grid", sx(0), sy(y), sx(w), sy(y));
    svg.close_group();
  }
  svg.open_group("stitches", stroke_attrs(opts));
  const double g = opts.gap_fraction;
  for (const auto& e : stitches.edges()) {
    if (e.orientation == Orientation::H) {
      svg.line("stitch", sx(e.x + g), sy(e.y), sx(e.x + 1 - g), sy(e.y));
    } else {
      svg.line("stitch", sx(e.x), sy(e.y + g), sx(e.x), sy(e.y + 1 - g));
    }
  }
  svg.close_group();
  return svg.finish();
}

std::string render_design_svg(const Design& design, const RenderOptions& opts) {
  return render_stitches_svg(rendered_stitches(design, opts), opts);
}

std::string render_stitches_ascii(const StitchSet& stitches, const RenderOptions& opts) {
  const std::string hglyph = opts.plain_ascii ? "-" : "─";
  const std::string vglyph = opts.plain_ascii ? "|" : "│";
  const std::string dot = opts.plain_ascii ? "+" : "·";
  const int w = stitches.width();
  const int h = stitches.height();
  std::string out;
  for (int r = 2 * h; r >= 0; --r) {
    for (int col = 0; col <= 2 * w; ++col) {
      const int x = col / 2;
      const int y = r / 2;
      const bool vx = col % 2 == 0;
      const bool vy = r % 2 == 0;
      if (vx && vy) {
        out += dot;
      } else if (vy) {
        out += stitches.contains({Orientation::H, x, y}) ? hglyph : " ";
      } else if (vx) {
        out += stitches.contains({Orientation::V, x, y}) ? vglyph : " ";
      } else {
        out += ' ';
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_design_ascii(const Design& design, const RenderOptions& opts) {
  return render_stitches_ascii(rendered_stitches(design, opts), opts);
}

std::string render_chart_svg(const kogin::KoginChart& chart, const RenderOptions& opts) {
  check(opts);
  const double c = opts.cell_size;
  const double margin = c;
  const auto rows = static_cast<double>(chart.rows.size());
  SvgWriter svg(2 * margin + chart.width * c, 2 * margin + rows * c, opts);
  if (opts.show_grid) {
    svg.open_group("grid", "stroke=\"" + escape(opts.stroke) +
                               "\" stroke-opacity=\"0.25\" stroke-width=\"" + num(c * 0.02) +
                               "\"");
    for (int x = 0; x <= chart.width; ++x) {
      svg.line("grid", margin + x * c, margin, margin + x * c, margin + rows * c);
    }
    for (std::size_t y = 0; y <= chart.rows.size(); ++y) {
      svg.line("grid", margin, margin + y * c, margin + chart.width * c, margin + y * c);
    }
    svg.close_group();
  }
  svg.open_group("runs", "fill=\"" + escape(opts.stroke) + "\"");
  for (std::size_t r = 0; r < chart.rows.size(); ++r) {
    for (const auto& run : chart.rows[r].runs) {
      svg.rect("run", margin + run.start * c, margin + (r + 0.35) * c, run.length * c, 0.3 * c);
    }
  }
  svg.close_group();
  return svg.finish();
}

std::string render_chart_text(const kogin::KoginChart& chart) {
  std::string out;
  for (const auto& row : chart.rows) {
    out += kogin::emit_row(row, chart.width);
    out += '\n';
  }
  return out;
}

std::string render_path_svg(std::span<const Vertex> cycle, const RenderOptions& opts) {
  check(opts);
  if (cycle.empty()) throw std::invalid_argument("empty path");
  int min_x = cycle[0].x, max_x = cycle[0].x, min_y = cycle[0].y, max_y = cycle[0].y;
  for (const auto& v : cycle) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  const double c = opts.cell_size;
  const double margin = c;
  auto sx = [&](double x) { return margin + (x - min_x) * c; };
  auto sy = [&](double y) { return margin + (max_y - y) * c; };
  SvgWriter svg(2 * margin + (max_x - min_x) * c, 2 * margin + (max_y - min_y) * c, opts);
  svg.open_group("stitches", stroke_attrs(opts));
  const double g = opts.gap_fraction;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& a = cycle[i];
    const auto& b = cycle[(i + 1) % cycle.size()];
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    svg.line("stitch", sx(a.x + g * dx), sy(a.y + g * dy), sx(b.x - g * dx), sy(b.y - g * dy));
  }
  svg.close_group();
  return svg.finish();
}

}  // namespace sashiko
