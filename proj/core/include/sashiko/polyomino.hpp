#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "sashiko/design.hpp"

namespace sashiko {

// Unit cell (cx, cy) is the square [cx, cx+1] x [cy, cy+1].
struct Cell {
  int x;
  int y;

  auto operator<=>(const Cell&) const = default;
};

// The eight symmetries of the square. mirror_x reflects x (vertical axis),
// mirror_y reflects y (horizontal axis), mirror_diag swaps x and y, and
// mirror_anti reflects across the other diagonal. Rotations are
// counter-clockwise.
enum class SquareOp : std::uint8_t {
  identity,
  mirror_x,
  mirror_y,
  rot180,
  rot90,
  rot270,
  mirror_diag,
  mirror_anti,
};

inline constexpr std::array<SquareOp, 8> kSquareOps = {
    SquareOp::identity, SquareOp::mirror_x, SquareOp::mirror_y,   SquareOp::rot180,
    SquareOp::rot90,    SquareOp::rot270,   SquareOp::mirror_diag, SquareOp::mirror_anti,
};

std::string_view name(SquareOp op);

// Applies op as a linear map about the origin.
std::pair<int, int> apply(SquareOp op, int x, int y);

// Set of cells translated so that min x = min y = 0, stored sorted.
class Polyomino {
 public:
  Polyomino() = default;
  // Normalizes to sorted unique cells translated to the canonical position.
  explicit Polyomino(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t area() const noexcept { return cells_.size(); }
  int width() const noexcept;
  int height() const noexcept;

  bool is_connected() const;
  // Number of cells per row, bottom row first.
  std::vector<int> row_profile() const;

  Polyomino transformed(SquareOp op) const;
  // Lexicographically least of the eight transforms.
  Polyomino canonical_free() const;
  bool equal_up_to_symmetry(const Polyomino& other) const;

  // Rows top first, '#' for a cell and '.' otherwise.
  std::string to_text() const;

  auto operator<=>(const Polyomino&) const = default;

 private:
  std::vector<Cell> cells_;
};

namespace polyominoes {
Polyomino monomino();
Polyomino domino();
// The 1-3-1 plus pentomino.
Polyomino plus();
}  // namespace polyominoes

// Cells enclosed by a closed lattice polygon given as its vertex cycle
// (last vertex not repeated), by even-odd scanline fill. Returned in
// absolute coordinates, sorted.
std::vector<Cell> enclosed_cells(std::span<const Vertex> cycle);

// Parses "x,y;x,y;..." into a polyomino. Throws ParseError.
Polyomino parse_cells(std::string_view text);

}  // namespace sashiko
