#pragma once

// Hitomezashi designs on the unit lattice.
//
// Coordinates are in thread units with the origin at the bottom-left corner
// and y increasing upward. A design with W x H cells has W+1 vertical stitch
// lines (x = 0..W) and H+1 horizontal stitch lines (y = 0..H).
//
// Each stitch line carries one phase bit. The unit edge at coordinate t along
// a line with bit b is stitched on the front iff (t + b) is even, so bit 0
// means the line's first stitch is on the front and bit 1 means it starts on
// the back.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sashiko {

// Ordered, non-empty sequence of phase bits. Character '0'/'1' form is
// written line 0 first.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::vector<std::uint8_t> bits);

  // Throws ParseError on characters other than '0'/'1' or on empty input.
  static BitWord parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  BitWord flipped() const;
  std::string str() const;

  auto operator<=>(const BitWord&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// The complete genome of a design: one phase bit per horizontal line (rows)
// and per vertical line (cols).
struct DesignSpec {
  BitWord rows;
  BitWord cols;

  int width() const noexcept { return static_cast<int>(cols.size()) - 1; }
  int height() const noexcept { return static_cast<int>(rows.size()) - 1; }

  auto operator<=>(const DesignSpec&) const = default;
};

enum class Orientation : std::uint8_t { H, V };

// Unit lattice edge. H spans (x,y)-(x+1,y); V spans (x,y)-(x,y+1).
struct Edge {
  Orientation orientation;
  int x;
  int y;

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

struct Vertex {
  int x;
  int y;

  auto operator<=>(const Vertex&) const = default;
};

// Set of unit edges on a W x H grid, stored as two dense bitmaps.
class StitchSet {
 public:
  StitchSet() = default;
  StitchSet(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool in_bounds(const Edge& e) const noexcept;
  bool contains(const Edge& e) const noexcept;
  // Throws std::out_of_range for edges outside the grid.
  void insert(const Edge& e);
  void erase(const Edge& e);

  std::size_t size() const noexcept { return count_; }
  std::size_t count(Orientation o) const noexcept;
  bool empty() const noexcept { return count_ == 0; }

  // Sorted: all H edges (by y, then x), then all V edges (by x, then y).
  std::vector<Edge> edges() const;

  // Number of stitched edges incident to a lattice vertex.
  int degree(Vertex v) const noexcept;

  bool operator==(const StitchSet&) const = default;

 private:
  std::size_t h_index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * width_ + x;
  }
  std::size_t v_index(int x, int y) const noexcept {
    return static_cast<std::size_t>(x) * height_ + y;
  }

  int width_ = 0;
  int height_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> h_;
  std::vector<std::uint8_t> v_;
};

// A design and its front stitches. Only build_design creates one, so front
// always agrees with spec.
class Design {
 public:
  const DesignSpec& spec() const noexcept { return spec_; }
  const StitchSet& front() const noexcept { return front_; }
  int width() const noexcept { return front_.width(); }
  int height() const noexcept { return front_.height(); }

  bool operator==(const Design& other) const { return spec_ == other.spec_; }

 private:
  friend Design build_design(const DesignSpec& spec);
  Design(DesignSpec spec, StitchSet front)
      : spec_(std::move(spec)), front_(std::move(front)) {}

  DesignSpec spec_;
  StitchSet front_;
};

// Throws DimensionError if either word has fewer than two lines.
Design build_design(const DesignSpec& spec);

// Parity rule for a single edge, independent of any StitchSet.
bool is_front_stitched(const DesignSpec& spec, const Edge& e);

// The reverse side: every phase bit flipped, no mirroring.
Design back_of(const Design& design);

// 2^(m+n) for m vertical and n horizontal lines. Throws DimensionError for
// m < 2 or n < 2 and OverflowError when m + n > 63.
std::uint64_t design_count(int m, int n);

enum class Stage { VerticalOnly, HorizontalOnly, Combined };

StitchSet stitch_stage(const Design& design, Stage stage);

// Pattern text: `rows=<bits>` and `cols=<bits>` lines, '#' comments, blank
// lines ignored, keys in any order, each exactly once.
DesignSpec parse_pattern(std::string_view text);
std::string emit_pattern(const DesignSpec& spec);

}  // namespace sashiko
