#pragma once

// Fibonacci snowflakes: closed lattice paths built from four quarter-turn
// copies of a Fibonacci turn word.
//
// Turn words: q0 = "", q1 = "R", and for n >= 2
//   q_n = q_{n-1} q_{n-2}         if n = 2 (mod 3)
//   q_n = q_{n-1} swap(q_{n-2})   otherwise,
// where swap exchanges L and R. The order-k snowflake uses the turn word
// whose length is odd_fibonacci(k). The path starts at the origin heading
// East and, for each letter, takes one unit step and then turns 90 degrees
// (R clockwise, L counter-clockwise). The word is traced four times.
//
// Orders 0..3 and every odd order up to kMaxSnowflakeOrder produce simple
// closed paths. Even orders from 4 on self-intersect and are rejected by
// the validation in build_snowflake.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sashiko/design.hpp"
#include "sashiko/polyomino.hpp"

namespace sashiko {

inline constexpr int kMaxSnowflakeOrder = 9;

// 1, 3, 5, 13, 21, 55, 89, ... (distinct odd Fibonacci numbers). Throws
// OverflowError once the value no longer fits in 64 bits.
std::uint64_t odd_fibonacci(int k);

enum class Turn : char { L = 'L', R = 'R' };

struct TurnWord {
  std::vector<Turn> letters;
  int order = 0;  // generation index n of q_n

  std::size_t size() const noexcept { return letters.size(); }
  std::string str() const;
  bool operator==(const TurnWord&) const = default;
};

TurnWord swap(const TurnWord& w);
// q_n for n >= 0.
TurnWord turn_word(int n);
// Generation index of the quarter word for snowflake order k.
int turn_word_index(int k);

enum class Heading : std::uint8_t { E, N, W, S };
char to_char(Heading h);

struct Snowflake {
  int order = 0;
  // Closed boundary; vertices[0] = (0, 0) and the closing step returns there.
  std::vector<Vertex> vertices;
  std::vector<Heading> steps;
  Polyomino polyomino;

  std::size_t perimeter() const noexcept { return steps.size(); }
  // Steps as a string over N/E/S/W.
  std::string step_string() const;
};

// Throws DimensionError for orders outside 0..kMaxSnowflakeOrder and
// ConstructionError if the traced path is not closed, not simple, or does
// not have perimeter 4 * odd_fibonacci(order).
Snowflake build_snowflake(int order);

// Smallest order k <= max_order whose snowflake equals p up to the eight
// square symmetries. Orders that fail construction are skipped.
std::optional<int> is_snowflake(const Polyomino& p, int max_order = kMaxSnowflakeOrder);

}  // namespace sashiko
