#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sashiko/design.hpp"
#include "sashiko/polyomino.hpp"

namespace sashiko {

// Closed stitch loop. edges[i] joins vertices[i] and vertices[i+1 mod n];
// vertices[0] is the loop's lexicographically least vertex.
struct Loop {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
  // Enclosed cells in grid coordinates, sorted.
  std::vector<Cell> cells;
  Polyomino polyomino;

  std::size_t area() const noexcept { return cells.size(); }
};

// Boundary-to-boundary stitch path. edges[i] joins vertices[i] and
// vertices[i+1]; vertices.front() is the lesser endpoint.
struct Path {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

struct Decomposition {
  std::vector<Loop> loops;
  std::vector<Path> paths;
  // parent[i] is the smallest loop strictly enclosing loop i.
  std::vector<std::optional<std::size_t>> parent;

  // Nesting depth of loop i; outermost loops have depth 1.
  int depth(std::size_t i) const;
  // 0 when there are no loops.
  int max_depth() const;
};

// Splits the front stitches into loops and paths, ordered by least vertex.
// Throws InternalError if the stitch graph breaks the degree law.
Decomposition decompose(const Design& design);
Decomposition decompose(const StitchSet& stitches);

Polyomino polyomino_of(const Loop& loop);

bool is_boundary(const StitchSet& grid, Vertex v);

// Symmetry ops about the grid centre. Four-fold and diagonal ops exist only
// on square grids.
bool op_applies(SquareOp op, int width, int height) noexcept;
// Throws DimensionError if op does not apply to the grid shape.
StitchSet transform(const StitchSet& stitches, SquareOp op);
Edge transform(const Edge& e, SquareOp op, int width, int height);

enum class PointGroup { c1, c2, c4, d1, d2, d4 };
std::string_view name(PointGroup g);

struct SymmetryReport {
  std::vector<SquareOp> ops;
  PointGroup point_group = PointGroup::c1;
  int row_period = 0;
  int col_period = 0;

  bool has(SquareOp op) const;
};

SymmetryReport detect_symmetry(const Design& design);

// Least p >= 1 with word[i] == word[i+p] wherever both exist.
int minimal_period(const BitWord& word);

// Which horizontal (Left/Right) and vertical (Up/Down) edge meets an
// interior vertex.
enum class Corner : std::uint8_t { LU, LD, RU, RD };
std::string_view name(Corner c);

class CornerMap {
 public:
  CornerMap(int width, int height, std::vector<Corner> corners);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  // Interior vertices only: 1 <= x <= W-1, 1 <= y <= H-1.
  Corner at(int x, int y) const;
  // One row per interior y, top row first, as two-letter codes.
  std::string to_text() const;

 private:
  int width_;
  int height_;
  std::vector<Corner> corners_;
};

// Throws DimensionError when the grid has no interior vertex.
CornerMap corner_map(const Design& design);

struct StatsRecord {
  int m = 0;  // vertical lines
  int n = 0;  // horizontal lines
  std::string rows_bits;
  std::string cols_bits;
  std::size_t loops = 0;
  std::size_t paths = 0;
  int max_depth = 0;
  std::size_t h_edges = 0;
  std::size_t v_edges = 0;
  std::map<std::size_t, std::size_t> area_hist;

  bool operator==(const StatsRecord&) const = default;
};

StatsRecord stats(const Design& design);

// Columns: m,n,rows_bits,cols_bits,loops,paths,max_depth,h_edges,v_edges,
// total_area,area_hist. area_hist is "area:count" pairs joined by ';'.
std::string stats_csv_header();
std::string to_csv_row(const StatsRecord& record);

}  // namespace sashiko
