#include "sashiko/analysis.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <sstream>

#include "sashiko/errors.hpp"

namespace sashiko {

namespace {

// Dense edge ids: H edges first, then V edges.
struct EdgeIndex {
  int width;
  int height;

  std::size_t id(const Edge& e) const {
    if (e.orientation == Orientation::H) return static_cast<std::size_t>(e.y) * width + e.x;
    return static_cast<std::size_t>(width) * (height + 1) +
           static_cast<std::size_t>(e.x) * height + e.y;
  }
  std::size_t size() const {
    return static_cast<std::size_t>(width) * (height + 1) +
           static_cast<std::size_t>(width + 1) * height;
  }
};

// The up to four edges touching v, with the vertex at their other end.
struct Incidence {
  Edge edge;
  Vertex other;
};

int incident(const StitchSet& s, Vertex v, std::array<Incidence, 4>& out) {
  int n = 0;
  const std::array<Incidence, 4> candidates = {{
      {{Orientation::H, v.x - 1, v.y}, {v.x - 1, v.y}},
      {{Orientation::H, v.x, v.y}, {v.x + 1, v.y}},
      {{Orientation::V, v.x, v.y - 1}, {v.x, v.y - 1}},
      {{Orientation::V, v.x, v.y}, {v.x, v.y + 1}},
  }};
  for (const auto& c : candidates) {
    if (s.contains(c.edge)) out[n++] = c;
  }
  return n;
}

std::string where(Vertex v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace

int Decomposition::depth(std::size_t i) const {
  int d = 1;
  for (auto p = parent.at(i); p; p = parent[*p]) ++d;
  return d;
}

int Decomposition::max_depth() const {
  int best = 0;
  for (std::size_t i = 0; i < loops.size(); ++i) best = std::max(best, depth(i));
  return best;
}

bool is_boundary(const StitchSet& grid, Vertex v) {
  return v.x == 0 || v.y == 0 || v.x == grid.width() || v.y == grid.height();
}

Polyomino polyomino_of(const Loop& loop) {
  return Polyomino(enclosed_cells(loop.vertices));
}

Decomposition decompose(const Design& design) { return decompose(design.front()); }

Decomposition decompose(const StitchSet& stitches) {
  const int w = stitches.width();
  const int h = stitches.height();
  const EdgeIndex index{w, h};
  std::vector<std::uint8_t> used(index.size(), 0);
  std::array<Incidence, 4> inc{};

  for (int x = 0; x <= w; ++x) {
    for (int y = 0; y <= h; ++y) {
      const Vertex v{x, y};
      const int d = incident(stitches, v, inc);
      if (!is_boundary(stitches, v) && d != 2) {
        throw InternalError("interior vertex " + where(v) + " has degree " +
                            std::to_string(d));
      }
      if (d > 2) {
        throw InternalError("boundary vertex " + where(v) + " has degree " +
                            std::to_string(d));
      }
    }
  }

  // Follows unused edges from start until stuck; returns the vertex chain.
  auto walk = [&](Vertex start, std::vector<Edge>& edges, std::vector<Vertex>& verts,
                  std::optional<Vertex> prefer_first) {
    verts.push_back(start);
    Vertex cur = start;
    bool first = true;
    for (;;) {
      const int d = incident(stitches, cur, inc);
      const Incidence* next = nullptr;
      for (int i = 0; i < d; ++i) {
        if (used[index.id(inc[i].edge)]) continue;
        if (first && prefer_first && inc[i].other != *prefer_first) continue;
        next = &inc[i];
        break;
      }
      first = false;
      if (!next) return;
      used[index.id(next->edge)] = 1;
      edges.push_back(next->edge);
      cur = next->other;
      if (cur == start) return;
      verts.push_back(cur);
    }
  };

  Decomposition out;
  for (int x = 0; x <= w; ++x) {
    for (int y = 0; y <= h; ++y) {
      const Vertex v{x, y};
      if (incident(stitches, v, inc) != 1 || used[index.id(inc[0].edge)]) continue;
      Path p;
      walk(v, p.edges, p.vertices, std::nullopt);
      if (p.vertices.back() < p.vertices.front()) {
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(p.edges.begin(), p.edges.end());
      }
      out.paths.push_back(std::move(p));
    }
  }

  for (int x = 0; x <= w; ++x) {
    for (int y = 0; y <= h; ++y) {
      const Vertex v{x, y};
      const int d = incident(stitches, v, inc);
      if (d != 2 || used[index.id(inc[0].edge)]) continue;
      // Leave the least vertex towards its lesser neighbour.
      const Vertex toward = std::min(inc[0].other, inc[1].other);
      Loop loop;
      walk(v, loop.edges, loop.vertices, toward);
      loop.cells = enclosed_cells(loop.vertices);
      loop.polyomino = Polyomino(loop.cells);
      out.loops.push_back(std::move(loop));
    }
  }

  auto least = [](const std::vector<Vertex>& vs) { return *std::min_element(vs.begin(), vs.end()); };
  std::stable_sort(out.paths.begin(), out.paths.end(), [&](const Path& a, const Path& b) {
    return least(a.vertices) < least(b.vertices);
  });
  // Loops are discovered at their least vertex in scan order, so already sorted.

  // Paint cells from the largest loop down; when a loop is reached, the
  // owner of its first cell is the smallest loop painted so far around it.
  out.parent.assign(out.loops.size(), std::nullopt);
  std::vector<std::size_t> by_area(out.loops.size());
  std::iota(by_area.begin(), by_area.end(), std::size_t{0});
  std::stable_sort(by_area.begin(), by_area.end(), [&](std::size_t a, std::size_t b) {
    return out.loops[a].area() > out.loops[b].area();
  });
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(static_cast<std::size_t>(w) * h, kNone);
  for (std::size_t i : by_area) {
    const auto& cells = out.loops[i].cells;
    const Cell probe = cells.front();
    const std::size_t at = static_cast<std::size_t>(probe.y) * w + probe.x;
    if (owner[at] != kNone) out.parent[i] = owner[at];
    for (const auto& c : cells) owner[static_cast<std::size_t>(c.y) * w + c.x] = i;
  }
  return out;
}

bool op_applies(SquareOp op, int width, int height) noexcept {
  switch (op) {
    case SquareOp::identity:
    case SquareOp::mirror_x:
    case SquareOp::mirror_y:
    case SquareOp::rot180:
      return true;
    default:
      return width == height;
  }
}

Edge transform(const Edge& e, SquareOp op, int width, int height) {
  // Edge midpoints in doubled coordinates, relative to the grid centre.
  const int mx = e.orientation == Orientation::H ? 2 * e.x + 1 : 2 * e.x;
  const int my = e.orientation == Orientation::H ? 2 * e.y : 2 * e.y + 1;
  auto [px, py] = apply(op, mx - width, my - height);
  px += width;
  py += height;
  if (px % 2 != 0) return {Orientation::H, (px - 1) / 2, py / 2};
  return {Orientation::V, px / 2, (py - 1) / 2};
}

StitchSet transform(const StitchSet& stitches, SquareOp op) {
  const int w = stitches.width();
  const int h = stitches.height();
  if (!op_applies(op, w, h)) {
    throw DimensionError(std::string(name(op)) + " needs a square grid");
  }
  StitchSet out(w, h);
  for (const auto& e : stitches.edges()) out.insert(transform(e, op, w, h));
  return out;
}

std::string_view name(PointGroup g) {
  switch (g) {
    case PointGroup::c1: return "c1";
    case PointGroup::c2: return "c2";
    case PointGroup::c4: return "c4";
    case PointGroup::d1: return "d1";
    case PointGroup::d2: return "d2";
    case PointGroup::d4: return "d4";
  }
  return "?";
}

bool SymmetryReport::has(SquareOp op) const {
  return std::find(ops.begin(), ops.end(), op) != ops.end();
}

int minimal_period(const BitWord& word) {
  const auto n = word.size();
  for (std::size_t p = 1; p < n; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < n && ok; ++i) ok = word[i] == word[i + p];
    if (ok) return static_cast<int>(p);
  }
  return static_cast<int>(n);
}

SymmetryReport detect_symmetry(const Design& design) {
  SymmetryReport report;
  const auto& front = design.front();
  for (auto op : kSquareOps) {
    if (!op_applies(op, design.width(), design.height())) continue;
    if (op == SquareOp::identity || transform(front, op) == front) report.ops.push_back(op);
  }
  switch (report.ops.size()) {
    case 1:
      report.point_group = PointGroup::c1;
      break;
    case 2:
      report.point_group = report.has(SquareOp::rot180) ? PointGroup::c2 : PointGroup::d1;
      break;
    case 4:
      report.point_group = report.has(SquareOp::rot90) ? PointGroup::c4 : PointGroup::d2;
      break;
    case 8:
      report.point_group = PointGroup::d4;
      break;
    default:
      throw InternalError("symmetry ops do not form a group");
  }
  report.row_period = minimal_period(design.spec().rows);
  report.col_period = minimal_period(design.spec().cols);
  return report;
}

std::string_view name(Corner c) {
  switch (c) {
    case Corner::LU: return "LU";
    case Corner::LD: return "LD";
    case Corner::RU: return "RU";
    case Corner::RD: return "RD";
  }
  return "?";
}

CornerMap::CornerMap(int width, int height, std::vector<Corner> corners)
    : width_(width), height_(height), corners_(std::move(corners)) {}

Corner CornerMap::at(int x, int y) const {
  if (x < 1 || x >= width_ || y < 1 || y >= height_) {
    throw std::out_of_range("corner map is defined on interior vertices only");
  }
  return corners_[static_cast<std::size_t>(y - 1) * (width_ - 1) + (x - 1)];
}

std::string CornerMap::to_text() const {
  std::string out;
  for (int y = height_ - 1; y >= 1; --y) {
    for (int x = 1; x < width_; ++x) {
      if (x > 1) out += ' ';
      out += name(at(x, y));
    }
    out += '\n';
  }
  return out;
}

CornerMap corner_map(const Design& design) {
  const int w = design.width();
  const int h = design.height();
  if (w < 2 || h < 2) {
    throw DimensionError("corner map needs an interior vertex (grid must be at least 2x2)");
  }
  const auto& spec = design.spec();
  std::vector<Corner> corners;
  corners.reserve(static_cast<std::size_t>(w - 1) * (h - 1));
  for (int y = 1; y < h; ++y) {
    for (int x = 1; x < w; ++x) {
      const bool right = is_front_stitched(spec, {Orientation::H, x, y});
      const bool up = is_front_stitched(spec, {Orientation::V, x, y});
      corners.push_back(right ? (up ? Corner::RU : Corner::RD) : (up ? Corner::LU : Corner::LD));
    }
  }
  return CornerMap(w, h, std::move(corners));
}

StatsRecord stats(const Design& design) {
  const auto d = decompose(design);
  StatsRecord r;
  r.m = static_cast<int>(design.spec().cols.size());
  r.n = static_cast<int>(design.spec().rows.size());
  r.rows_bits = design.spec().rows.str();
  r.cols_bits = design.spec().cols.str();
  r.loops = d.loops.size();
  r.paths = d.paths.size();
  r.max_depth = d.max_depth();
  r.h_edges = design.front().count(Orientation::H);
  r.v_edges = design.front().count(Orientation::V);
  for (const auto& loop : d.loops) ++r.area_hist[loop.area()];
  return r;
}

std::string stats_csv_header() {
  return "m,n,rows_bits,cols_bits,loops,paths,max_depth,h_edges,v_edges,total_area,area_hist";
}

std::string to_csv_row(const StatsRecord& r) {
  std::ostringstream os;
  std::size_t total = 0;
  for (auto [area, count] : r.area_hist) total += area * count;
  os << r.m << ',' << r.n << ',' << r.rows_bits << ',' << r.cols_bits << ',' << r.loops << ','
     << r.paths << ',' << r.max_depth << ',' << r.h_edges << ',' << r.v_edges << ',' << total
     << ',';
  bool first = true;
  for (auto [area, count] : r.area_hist) {
    if (!first) os << ';';
    os << area << ':' << count;
    first = false;
  }
  return os.str();
}

}  // namespace sashiko
