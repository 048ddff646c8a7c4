#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sashiko/analysis.hpp"
#include "sashiko/design.hpp"
#include "sashiko/polyomino.hpp"

namespace sashiko {

// Exhaustive runs are limited to 2^kDefaultCapBits designs unless the
// caller raises the cap.
inline constexpr unsigned kDefaultCapBits = 24;

// Design number `index` among the 2^(m+n) specs with m column lines and n
// row lines. The index reads rows then cols, line 0 most significant, so
// increasing index is lexicographic order of the bitstrings.
DesignSpec spec_at(int m, int n, std::uint64_t index);
std::uint64_t index_of(const DesignSpec& spec);

// Every spec for (m, n) exactly once, in lexicographic order.
class DesignRange {
 public:
  class iterator {
   public:
    using value_type = DesignSpec;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    DesignSpec operator*() const { return spec_at(m_, n_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    bool operator==(const iterator& other) const { return index_ == other.index_; }

   private:
    friend class DesignRange;
    iterator(int m, int n, std::uint64_t index) : m_(m), n_(n), index_(index) {}
    int m_ = 0;
    int n_ = 0;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {m_, n_, 0}; }
  iterator end() const { return {m_, n_, size_}; }
  std::uint64_t size() const noexcept { return size_; }

 private:
  friend DesignRange enumerate_designs(int m, int n, unsigned cap_bits);
  DesignRange(int m, int n, std::uint64_t size) : m_(m), n_(n), size_(size) {}
  int m_;
  int n_;
  std::uint64_t size_;
};

// Throws DimensionError for m or n < 2 and CapExceededError when m + n is
// above cap_bits.
DesignRange enumerate_designs(int m, int n, unsigned cap_bits = kDefaultCapBits);

struct Exhaustive {};
// Draws `count` specs with replacement. Each draw takes one 64-bit output of
// std::mt19937_64(seed) and keeps its low m+n bits as the design index.
struct Sample {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using CensusMode = std::variant<Exhaustive, Sample>;

struct RunOptions {
  unsigned cap_bits = kDefaultCapBits;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct CensusTable {
  std::vector<StatsRecord> rows;
  std::map<std::size_t, std::uint64_t> loop_hist;
  std::map<std::size_t, std::uint64_t> path_hist;
  std::map<std::size_t, std::uint64_t> area_hist;

  // Header plus one line per row, '\n' terminated.
  std::string to_csv() const;
  // "kind,value,count" lines for the three histograms.
  std::string aggregates_csv() const;
};

CensusTable census(int m, int n, const CensusMode& mode, const RunOptions& options = {});

struct FindOptions : RunOptions {
  // Match the target up to the eight square symmetries, not just translation.
  bool up_to_symmetry = false;
};

bool contains_polyomino(const Decomposition& d, const Polyomino& target, bool up_to_symmetry);

// Specs for (m, n) whose decomposition has a loop enclosing `target`, in
// enumeration order.
std::vector<DesignSpec> find_designs_containing(const Polyomino& target, int m, int n,
                                                const FindOptions& options = {});

// Same search over every 2 <= m' <= m, 2 <= n' <= n, ordered by (m', n').
std::vector<DesignSpec> find_designs_containing_up_to(const Polyomino& target, int max_m,
                                                      int max_n,
                                                      const FindOptions& options = {});

}  // namespace sashiko
