#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

// Compares CLI output with checked-in golden files. Set SASHIKO_UPDATE_GOLDEN=1
// to rewrite them after an intended output change.

namespace {

struct Case {
  std::string name;
  std::vector<std::string> args;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<Case> load_cases() {
  std::ifstream in(SASHIKO_GOLDEN_DIR "/commands.txt");
  std::vector<Case> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    Case c{trim(line.substr(0, bar)), {}};
    std::istringstream words(line.substr(bar + 1));
    for (std::string w; words >> w;) c.args.push_back(w);
    out.push_back(std::move(c));
  }
  return out;
}

class Golden : public ::testing::TestWithParam<Case> {};

TEST_P(Golden, MatchesFile) {
  const auto& c = GetParam();
  std::ostringstream out, err;
  const int code = sashiko::cli::main_entry(c.args, out, err);
  const std::string actual = "exit=" + std::to_string(code) + "\n" + out.str();
  const std::string path = std::string(SASHIKO_GOLDEN_DIR) + "/" + c.name + ".out";
  if (std::getenv("SASHIKO_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    GTEST_SKIP() << "rewrote " << path;
  }
  EXPECT_EQ(actual, oracle::read_file(path)) << err.str();
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(load_cases()),
                         [](const auto& info) { return info.param.name; });

}  // namespace
