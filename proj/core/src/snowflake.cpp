#include "sashiko/snowflake.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "sashiko/errors.hpp"

namespace sashiko {

namespace {

// Fibonacci indices n with F_n odd and not already seen: 1, 4, 5, 7, 8, ...
std::vector<std::pair<int, std::uint64_t>> odd_fibonacci_table() {
  std::vector<std::pair<int, std::uint64_t>> table;
  std::uint64_t a = 0;  // F_{n-1}
  std::uint64_t b = 1;  // F_n
  std::uint64_t last = 0;
  for (int n = 1;; ++n) {
    if ((b & 1) && b != last) {
      table.emplace_back(n, b);
      last = b;
    }
    if (b > std::numeric_limits<std::uint64_t>::max() - a) break;
    const auto next = a + b;
    a = b;
    b = next;
  }
  return table;
}

const std::vector<std::pair<int, std::uint64_t>>& odd_table() {
  static const auto table = odd_fibonacci_table();
  return table;
}

}  // namespace

std::uint64_t odd_fibonacci(int k) {
  if (k < 0) throw DimensionError("odd_fibonacci index must be >= 0");
  const auto& table = odd_table();
  if (static_cast<std::size_t>(k) >= table.size()) {
    throw OverflowError("odd_fibonacci(" + std::to_string(k) + ") does not fit in 64 bits");
  }
  return table[k].second;
}

int turn_word_index(int k) {
  odd_fibonacci(k);
  return odd_table()[k].first;
}

std::string TurnWord::str() const {
  std::string s;
  s.reserve(letters.size());
  for (auto t : letters) s.push_back(static_cast<char>(t));
  return s;
}

TurnWord swap(const TurnWord& w) {
  TurnWord out = w;
  for (auto& t : out.letters) t = t == Turn::L ? Turn::R : Turn::L;
  return out;
}

TurnWord turn_word(int n) {
  if (n < 0) throw DimensionError("turn word index must be >= 0");
  TurnWord prev{{}, 0};
  TurnWord cur{{Turn::R}, 1};
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    TurnWord tail = i % 3 == 2 ? prev : swap(prev);
    TurnWord next{cur.letters, i};
    next.letters.insert(next.letters.end(), tail.letters.begin(), tail.letters.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

char to_char(Heading h) {
  switch (h) {
    case Heading::E: return 'E';
    case Heading::N: return 'N';
    case Heading::W: return 'W';
    case Heading::S: return 'S';
  }
  return '?';
}

std::string Snowflake::step_string() const {
  std::string s;
  s.reserve(steps.size());
  for (auto h : steps) s.push_back(to_char(h));
  return s;
}

Snowflake build_snowflake(int order) {
  if (order < 0 || order > kMaxSnowflakeOrder) {
    throw DimensionError("snowflake order must be in 0.." + std::to_string(kMaxSnowflakeOrder));
  }
  const auto quarter = turn_word(turn_word_index(order));

  Snowflake s;
  s.order = order;
  Vertex pos{0, 0};
  auto heading = Heading::E;
  s.vertices.push_back(pos);
  for (int rep = 0; rep < 4; ++rep) {
    for (auto t : quarter.letters) {
      switch (heading) {
        case Heading::E: ++pos.x; break;
        case Heading::N: ++pos.y; break;
        case Heading::W: --pos.x; break;
        case Heading::S: --pos.y; break;
      }
      s.steps.push_back(heading);
      s.vertices.push_back(pos);
      const int turn = t == Turn::L ? 1 : 3;
      heading = static_cast<Heading>((static_cast<int>(heading) + turn) % 4);
    }
  }

  const std::string label = "snowflake of order " + std::to_string(order);
  if (s.vertices.back() != s.vertices.front()) {
    throw ConstructionError(label + " is not closed");
  }
  s.vertices.pop_back();
  std::set<Vertex> seen(s.vertices.begin(), s.vertices.end());
  if (seen.size() != s.vertices.size()) {
    throw ConstructionError(label + " is not simple");
  }
  const auto expected = 4 * odd_fibonacci(order);
  if (s.perimeter() != expected) {
    throw ConstructionError(label + " has perimeter " + std::to_string(s.perimeter()) +
                            ", expected " + std::to_string(expected));
  }
  s.polyomino = Polyomino(enclosed_cells(s.vertices));
  if (!s.polyomino.is_connected()) {
    throw ConstructionError(label + " does not enclose a polyomino");
  }
  return s;
}

std::optional<int> is_snowflake(const Polyomino& p, int max_order) {
  if (p.area() == 0) return std::nullopt;
  const auto canonical = p.canonical_free();
  max_order = std::min(max_order, kMaxSnowflakeOrder);
  for (int k = 0; k <= max_order; ++k) {
    try {
      const auto s = build_snowflake(k);
      if (s.polyomino.area() == p.area() && s.polyomino.canonical_free() == canonical) return k;
    } catch (const ConstructionError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace sashiko
