#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sashiko/sashiko.hpp"

namespace sashiko::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kIoError = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CommandKind {
  generate,
  dual,
  decompose,
  stats,
  symmetry,
  enumerate,
  census,
  find,
  snowflake,
  kogin_validate,
  kogin_render,
  motif_list,
};

struct Command {
  CommandKind kind = CommandKind::generate;

  std::optional<DesignSpec> spec;
  RenderOptions render;
  std::string format;
  std::optional<std::string> out;

  int m = 0;
  int n = 0;
  unsigned cap_bits = kDefaultCapBits;
  unsigned threads = 0;
  CensusMode census_mode = Exhaustive{};
  bool aggregates = false;

  Polyomino target;
  bool up_to_symmetry = false;
  bool all_sizes = false;

  int order = 0;

  std::optional<kogin::KoginChart> chart;
  bool strict = true;
};

// Expands a --rows/--cols value: a bitstring, or one of `zeros[:len]`,
// `ones[:len]`, `alternating[:len]`, `random:p=<float>,seed=<int>[,len=<n>]`,
// `fibword:<len>`. default_length applies when a shorthand has no length.
BitWord expand_word(const std::string& value, std::optional<int> default_length);

// Binary Fibonacci word w1 = "1", w2 = "10", w_n = w_{n-1} w_{n-2}, cut to
// `length` characters.
std::string fibonacci_word(int length);

// Parses a --target value: `monomino`, `plus`, `snowflake:<order>` or
// `cells:x,y;x,y;...`.
Polyomino parse_target(const std::string& value);

// args excludes the program name. Throws UsageError or IoError; --help
// throws HelpRequested carrying the help text.
Command parse_args(const std::vector<std::string>& args);

struct HelpRequested {
  std::string text;
};

// Throws sashiko::Error for domain failures and IoError for --out failures.
// Returns the exit code for commands whose result is a verdict
// (kogin-validate).
int run(const Command& command, std::ostream& out);

// parse_args + run with every failure mapped to its exit code and message.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sashiko::cli
