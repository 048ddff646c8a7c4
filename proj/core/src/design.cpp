#include "sashiko/design.hpp"

#include <optional>
#include <stdexcept>

#include "sashiko/errors.hpp"

namespace sashiko {

CapExceededError::CapExceededError(std::size_t requested_bits, std::size_t cap_bits)
    : Error("enumeration of 2^" + std::to_string(requested_bits) +
            " designs exceeds the cap of 2^" + std::to_string(cap_bits)),
      requested_bits_(requested_bits),
      cap_bits_(cap_bits) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) +
            (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
      line_(line),
      column_(column) {}

WidthMismatchError::WidthMismatchError(std::size_t line, std::size_t expected,
                                       std::size_t actual)
    : ParseError(line, 0,
                 "row width " + std::to_string(actual) + " does not match width=" +
                     std::to_string(expected)) {}

BitWord::BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("phase bits must be 0 or 1");
  }
}

BitWord BitWord::parse(std::string_view text) {
  if (text.empty()) throw ParseError(1, 0, "empty bitstring");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError(1, i + 1, std::string("invalid bit '") + c + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitWord(std::move(bits));
}

BitWord BitWord::flipped() const {
  BitWord out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

std::string BitWord::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::string to_string(const Edge& e) {
  return std::string(e.orientation == Orientation::H ? "H" : "V") + "(" +
         std::to_string(e.x) + "," + std::to_string(e.y) + ")";
}

StitchSet::StitchSet(int width, int height)
    : width_(width),
      height_(height),
      h_(static_cast<std::size_t>(width) * (height + 1), 0),
      v_(static_cast<std::size_t>(width + 1) * height, 0) {
  if (width < 0 || height < 0) throw std::invalid_argument("negative grid size");
}

bool StitchSet::in_bounds(const Edge& e) const noexcept {
  if (e.orientation == Orientation::H) {
    return e.x >= 0 && e.x < width_ && e.y >= 0 && e.y <= height_;
  }
  return e.x >= 0 && e.x <= width_ && e.y >= 0 && e.y < height_;
}

bool StitchSet::contains(const Edge& e) const noexcept {
  if (!in_bounds(e)) return false;
  return e.orientation == Orientation::H ? h_[h_index(e.x, e.y)] != 0
                                         : v_[v_index(e.x, e.y)] != 0;
}

void StitchSet::insert(const Edge& e) {
  if (!in_bounds(e)) throw std::out_of_range("edge " + to_string(e) + " outside grid");
  auto& slot = e.orientation == Orientation::H ? h_[h_index(e.x, e.y)] : v_[v_index(e.x, e.y)];
  if (!slot) {
    slot = 1;
    ++count_;
  }
}

void StitchSet::erase(const Edge& e) {
  if (!in_bounds(e)) return;
  auto& slot = e.orientation == Orientation::H ? h_[h_index(e.x, e.y)] : v_[v_index(e.x, e.y)];
  if (slot) {
    slot = 0;
    --count_;
  }
}

std::size_t StitchSet::count(Orientation o) const noexcept {
  const auto& bits = o == Orientation::H ? h_ : v_;
  std::size_t n = 0;
  for (auto b : bits) n += b;
  return n;
}

std::vector<Edge> StitchSet::edges() const {
  std::vector<Edge> out;
  out.reserve(count_);
  for (int y = 0; y <= height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (h_[h_index(x, y)]) out.push_back({Orientation::H, x, y});
    }
  }
  for (int x = 0; x <= width_; ++x) {
    for (int y = 0; y < height_; ++y) {
      if (v_[v_index(x, y)]) out.push_back({Orientation::V, x, y});
    }
  }
  return out;
}

int StitchSet::degree(Vertex v) const noexcept {
  return static_cast<int>(contains({Orientation::H, v.x - 1, v.y})) +
         static_cast<int>(contains({Orientation::H, v.x, v.y})) +
         static_cast<int>(contains({Orientation::V, v.x, v.y - 1})) +
         static_cast<int>(contains({Orientation::V, v.x, v.y}));
}

bool is_front_stitched(const DesignSpec& spec, const Edge& e) {
  if (e.orientation == Orientation::H) return ((e.x + spec.rows[e.y]) & 1) == 0;
  return ((e.y + spec.cols[e.x]) & 1) == 0;
}

Design build_design(const DesignSpec& spec) {
  if (spec.rows.size() < 2 || spec.cols.size() < 2) {
    throw DimensionError("a design needs at least 2 row and 2 column lines (got rows=" +
                         std::to_string(spec.rows.size()) +
                         ", cols=" + std::to_string(spec.cols.size()) + ")");
  }
  const int w = spec.width();
  const int h = spec.height();
  StitchSet front(w, h);
  for (int y = 0; y <= h; ++y) {
    for (int x = spec.rows[y]; x < w; x += 2) front.insert({Orientation::H, x, y});
  }
  for (int x = 0; x <= w; ++x) {
    for (int y = spec.cols[x]; y < h; y += 2) front.insert({Orientation::V, x, y});
  }
  return Design(spec, std::move(front));
}

Design back_of(const Design& design) {
  return build_design({design.spec().rows.flipped(), design.spec().cols.flipped()});
}

std::uint64_t design_count(int m, int n) {
  if (m < 2 || n < 2) throw DimensionError("design_count needs m >= 2 and n >= 2");
  if (m + n > 63) {
    throw OverflowError("2^(m+n) with m+n=" + std::to_string(m + n) +
                        " exceeds the 63-bit limit");
  }
  return std::uint64_t{1} << (m + n);
}

StitchSet stitch_stage(const Design& design, Stage stage) {
  if (stage == Stage::Combined) return design.front();
  StitchSet out(design.width(), design.height());
  const auto keep = stage == Stage::VerticalOnly ? Orientation::V : Orientation::H;
  for (const auto& e : design.front().edges()) {
    if (e.orientation == keep) out.insert(e);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

DesignSpec parse_pattern(std::string_view text) {
  std::optional<BitWord> rows;
  std::optional<BitWord> cols;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    auto hash = raw.find('#');
    auto line = trim(raw.substr(0, hash));
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, 0, "expected key=value");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    std::optional<BitWord>* slot = nullptr;
    if (key == "rows") {
      slot = &rows;
    } else if (key == "cols") {
      slot = &cols;
    } else {
      throw ParseError(line_no, 1, "unknown key '" + std::string(key) + "'");
    }
    if (slot->has_value()) {
      throw ParseError(line_no, 1, "duplicate key '" + std::string(key) + "'");
    }
    try {
      *slot = BitWord::parse(value);
    } catch (const ParseError& e) {
      const auto column =
          e.column() ? static_cast<std::size_t>(value.data() - raw.data()) + e.column() : 0;
      throw ParseError(line_no, column, "bad bitstring for '" + std::string(key) + "'");
    }
  }
  if (!rows) throw ParseError(line_no, 0, "missing 'rows' key");
  if (!cols) throw ParseError(line_no, 0, "missing 'cols' key");
  return {std::move(*rows), std::move(*cols)};
}

std::string emit_pattern(const DesignSpec& spec) {
  return "rows=" + spec.rows.str() + "\ncols=" + spec.cols.str() + "\n";
}

}  // namespace sashiko
