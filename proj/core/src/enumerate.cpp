#include "sashiko/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <thread>

#include "sashiko/errors.hpp"

namespace sashiko {

namespace {

void check_shape(int m, int n) {
  if (m < 2 || n < 2) {
    throw DimensionError("enumeration needs m >= 2 and n >= 2 (got m=" + std::to_string(m) +
                         ", n=" + std::to_string(n) + ")");
  }
}

unsigned resolve_threads(unsigned requested, std::uint64_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work, 1)));
}

// Calls fn(begin, end) on contiguous slices of [0, count), one per thread.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned threads, Fn fn) {
  threads = resolve_threads(threads, count);
  if (threads == 1) {
    fn(std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(count, chunk * t);
    const std::uint64_t end = std::min(count, begin + chunk);
    workers.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

DesignSpec spec_at(int m, int n, std::uint64_t index) {
  std::vector<std::uint8_t> rows(n);
  std::vector<std::uint8_t> cols(m);
  for (int i = m - 1; i >= 0; --i, index >>= 1) cols[i] = index & 1;
  for (int i = n - 1; i >= 0; --i, index >>= 1) rows[i] = index & 1;
  return {BitWord(std::move(rows)), BitWord(std::move(cols))};
}

std::uint64_t index_of(const DesignSpec& spec) {
  std::uint64_t index = 0;
  for (auto b : spec.rows.bits()) index = (index << 1) | b;
  for (auto b : spec.cols.bits()) index = (index << 1) | b;
  return index;
}

DesignRange enumerate_designs(int m, int n, unsigned cap_bits) {
  check_shape(m, n);
  const auto bits = static_cast<unsigned>(m + n);
  if (bits > cap_bits || bits > 63) throw CapExceededError(bits, std::min(cap_bits, 63u));
  return DesignRange(m, n, std::uint64_t{1} << bits);
}

std::string CensusTable::to_csv() const {
  std::string out = stats_csv_header() + "\n";
  for (const auto& r : rows) {
    out += to_csv_row(r);
    out += '\n';
  }
  return out;
}

std::string CensusTable::aggregates_csv() const {
  std::ostringstream os;
  os << "kind,value,count\n";
  for (auto [k, c] : loop_hist) os << "loops," << k << ',' << c << '\n';
  for (auto [k, c] : path_hist) os << "paths," << k << ',' << c << '\n';
  for (auto [k, c] : area_hist) os << "area," << k << ',' << c << '\n';
  return os.str();
}

CensusTable census(int m, int n, const CensusMode& mode, const RunOptions& options) {
  check_shape(m, n);
  std::vector<std::uint64_t> indices;
  std::uint64_t count = 0;
  if (std::holds_alternative<Exhaustive>(mode)) {
    count = enumerate_designs(m, n, options.cap_bits).size();
  } else {
    const auto& sample = std::get<Sample>(mode);
    if (m + n > 63) throw OverflowError("sampling supports m + n <= 63");
    if (options.cap_bits < 63 && sample.count > (std::uint64_t{1} << options.cap_bits)) {
      throw CapExceededError(std::bit_width(sample.count - 1), options.cap_bits);
    }
    const std::uint64_t mask = (std::uint64_t{1} << (m + n)) - 1;
    std::mt19937_64 engine(sample.seed);
    indices.resize(sample.count);
    for (auto& idx : indices) idx = engine() & mask;
    count = sample.count;
  }

  CensusTable table;
  table.rows.resize(count);
  parallel_chunks(count, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (auto i = begin; i < end; ++i) {
      const auto index = indices.empty() ? i : indices[i];
      table.rows[i] = stats(build_design(spec_at(m, n, index)));
    }
  });
  for (const auto& r : table.rows) {
    ++table.loop_hist[r.loops];
    ++table.path_hist[r.paths];
    for (auto [area, c] : r.area_hist) table.area_hist[area] += c;
  }
  return table;
}

bool contains_polyomino(const Decomposition& d, const Polyomino& target, bool up_to_symmetry) {
  const auto canonical = up_to_symmetry ? target.canonical_free() : target;
  for (const auto& loop : d.loops) {
    if (loop.area() != target.area()) continue;
    if (up_to_symmetry ? loop.polyomino.canonical_free() == canonical
                       : loop.polyomino == canonical) {
      return true;
    }
  }
  return false;
}

std::vector<DesignSpec> find_designs_containing(const Polyomino& target, int m, int n,
                                                const FindOptions& options) {
  const auto range = enumerate_designs(m, n, options.cap_bits);
  const int w = m - 1;
  const int h = n - 1;
  // The enclosed region has to fit inside the grid.
  const bool fits = (target.width() <= w && target.height() <= h) ||
                    (options.up_to_symmetry && target.height() <= w && target.width() <= h);
  if (!fits || target.area() == 0) return {};

  std::vector<std::uint8_t> hit(range.size(), 0);
  parallel_chunks(range.size(), options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (auto i = begin; i < end; ++i) {
      hit[i] = contains_polyomino(decompose(build_design(spec_at(m, n, i))), target,
                                  options.up_to_symmetry);
    }
  });
  std::vector<DesignSpec> out;
  for (std::uint64_t i = 0; i < range.size(); ++i) {
    if (hit[i]) out.push_back(spec_at(m, n, i));
  }
  return out;
}

std::vector<DesignSpec> find_designs_containing_up_to(const Polyomino& target, int max_m,
                                                      int max_n, const FindOptions& options) {
  check_shape(max_m, max_n);
  std::vector<DesignSpec> out;
  for (int m = 2; m <= max_m; ++m) {
    for (int n = 2; n <= max_n; ++n) {
      auto found = find_designs_containing(target, m, n, options);
      out.insert(out.end(), std::make_move_iterator(found.begin()),
                 std::make_move_iterator(found.end()));
    }
  }
  return out;
}

}  // namespace sashiko
