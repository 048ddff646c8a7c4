#pragma once

#include <span>
#include <string>

#include "sashiko/design.hpp"
#include "sashiko/kogin.hpp"

namespace sashiko {

enum class Side { front, back };

struct RenderOptions {
  double cell_size = 20.0;  // output units per thread; must be > 0
  Side side = Side::front;
  // Draw the back as seen when the fabric is turned over (x -> W - x).
  bool mirror_back = false;
  Stage stage = Stage::Combined;
  bool show_grid = false;
  // Blank fraction of cell_size left at each end of a stitch.
  double gap_fraction = 0.15;
  double stroke_width_fraction = 0.12;
  std::string stroke = "white";
  std::string background = "#1d2951";
  // ASCII only: '-', '|', '+' instead of box-drawing characters.
  bool plain_ascii = false;
};

// Throws std::invalid_argument on non-positive cell_size or a gap outside
// [0, 0.5).
void check(const RenderOptions& opts);

// The stitches a rendering of `design` shows: side, then stage, then the
// optional back mirror.
StitchSet rendered_stitches(const Design& design, const RenderOptions& opts);

// One <line class="stitch"> per edge, in StitchSet::edges() order.
std::string render_stitches_svg(const StitchSet& stitches, const RenderOptions& opts);
std::string render_design_svg(const Design& design, const RenderOptions& opts = {});

// (2H+1) lines of (2W+1) glyphs, top row first.
std::string render_stitches_ascii(const StitchSet& stitches, const RenderOptions& opts);
std::string render_design_ascii(const Design& design, const RenderOptions& opts = {});

// One <rect class="run"> per run, run.length * cell_size wide.
std::string render_chart_svg(const kogin::KoginChart& chart, const RenderOptions& opts = {});
std::string render_chart_text(const kogin::KoginChart& chart);

// Closed lattice path as one <line class="stitch"> per unit step.
std::string render_path_svg(std::span<const Vertex> cycle, const RenderOptions& opts = {});

}  // namespace sashiko
