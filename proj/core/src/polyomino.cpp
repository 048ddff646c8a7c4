#include "sashiko/polyomino.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "sashiko/errors.hpp"

namespace sashiko {

std::string_view name(SquareOp op) {
  switch (op) {
    case SquareOp::identity: return "identity";
    case SquareOp::mirror_x: return "mirrorX";
    case SquareOp::mirror_y: return "mirrorY";
    case SquareOp::rot180: return "rot180";
    case SquareOp::rot90: return "rot90";
    case SquareOp::rot270: return "rot270";
    case SquareOp::mirror_diag: return "mirrorDiag";
    case SquareOp::mirror_anti: return "mirrorAnti";
  }
  return "?";
}

std::pair<int, int> apply(SquareOp op, int x, int y) {
  switch (op) {
    case SquareOp::identity: return {x, y};
    case SquareOp::mirror_x: return {-x, y};
    case SquareOp::mirror_y: return {x, -y};
    case SquareOp::rot180: return {-x, -y};
    case SquareOp::rot90: return {-y, x};
    case SquareOp::rot270: return {y, -x};
    case SquareOp::mirror_diag: return {y, x};
    case SquareOp::mirror_anti: return {-y, -x};
  }
  return {x, y};
}

Polyomino::Polyomino(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.empty()) return;
  int min_x = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  for (const auto& c : cells_) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (auto& c : cells_) {
    c.x -= min_x;
    c.y -= min_y;
  }
}

int Polyomino::width() const noexcept {
  int w = 0;
  for (const auto& c : cells_) w = std::max(w, c.x + 1);
  return w;
}

int Polyomino::height() const noexcept {
  int h = 0;
  for (const auto& c : cells_) h = std::max(h, c.y + 1);
  return h;
}

bool Polyomino::is_connected() const {
  if (cells_.empty()) return false;
  std::set<Cell> remaining(cells_.begin(), cells_.end());
  std::queue<Cell> frontier;
  frontier.push(cells_.front());
  remaining.erase(cells_.front());
  while (!frontier.empty()) {
    auto c = frontier.front();
    frontier.pop();
    for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      auto it = remaining.find({c.x + dx, c.y + dy});
      if (it != remaining.end()) {
        frontier.push(*it);
        remaining.erase(it);
      }
    }
  }
  return remaining.empty();
}

std::vector<int> Polyomino::row_profile() const {
  std::vector<int> rows(height(), 0);
  for (const auto& c : cells_) ++rows[c.y];
  return rows;
}

Polyomino Polyomino::transformed(SquareOp op) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) {
    // Transform the cell centre (doubled), then back to the lower-left corner.
    auto [px, py] = apply(op, 2 * c.x + 1, 2 * c.y + 1);
    out.push_back({(px - 1) / 2, (py - 1) / 2});
  }
  return Polyomino(std::move(out));
}

Polyomino Polyomino::canonical_free() const {
  Polyomino best = *this;
  for (auto op : kSquareOps) {
    auto t = transformed(op);
    if (t < best) best = std::move(t);
  }
  return best;
}

bool Polyomino::equal_up_to_symmetry(const Polyomino& other) const {
  if (area() != other.area()) return false;
  return canonical_free() == other.canonical_free();
}

std::string Polyomino::to_text() const {
  const int w = width();
  const int h = height();
  std::string grid(static_cast<std::size_t>(h) * (w + 1), '.');
  for (int r = 0; r < h; ++r) grid[static_cast<std::size_t>(r) * (w + 1) + w] = '\n';
  for (const auto& c : cells_) {
    grid[static_cast<std::size_t>(h - 1 - c.y) * (w + 1) + c.x] = '#';
  }
  return grid;
}

namespace polyominoes {

Polyomino monomino() { return Polyomino({{0, 0}}); }
Polyomino domino() { return Polyomino({{0, 0}, {1, 0}}); }
Polyomino plus() { return Polyomino({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}); }

}  // namespace polyominoes

std::vector<Cell> enclosed_cells(std::span<const Vertex> cycle) {
  // Vertical crossings per row band [y, y+1].
  std::map<int, std::vector<int>> crossings;
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = cycle[i];
    const auto& b = cycle[(i + 1) % n];
    if (a.x != b.x && a.y != b.y) {
      throw std::invalid_argument("polygon segments must be axis-aligned");
    }
    if (a.x != b.x) continue;
    for (int y = std::min(a.y, b.y); y < std::max(a.y, b.y); ++y) crossings[y].push_back(a.x);
  }
  std::vector<Cell> cells;
  for (auto& [y, xs] : crossings) {
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      for (int x = xs[i]; x < xs[i + 1]; ++x) cells.push_back({x, y});
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

Polyomino parse_cells(std::string_view text) {
  std::vector<Cell> cells;
  std::size_t pos = 0;
  auto fail = [&](std::size_t col, const std::string& msg) -> ParseError {
    return ParseError(1, col + 1, msg);
  };
  auto read_int = [&](int& out) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr == first) throw fail(pos, "expected an integer");
    pos += static_cast<std::size_t>(ptr - first);
  };
  while (pos < text.size()) {
    Cell c{};
    read_int(c.x);
    if (pos >= text.size() || text[pos] != ',') throw fail(pos, "expected ','");
    ++pos;
    read_int(c.y);
    cells.push_back(c);
    if (pos < text.size()) {
      if (text[pos] != ';') throw fail(pos, "expected ';'");
      ++pos;
      if (pos == text.size()) throw fail(pos, "trailing ';'");
    }
  }
  if (cells.empty()) throw ParseError(1, 0, "empty cell list");
  return Polyomino(std::move(cells));
}

}  // namespace sashiko
