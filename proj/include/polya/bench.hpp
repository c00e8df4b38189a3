#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polya/big_count.hpp"
#include "polya/concentration.hpp"

namespace polya::bench {

enum class SweepAxis { colors, set_size, group_size };

SweepAxis parse_axis(std::string_view text);

/// How a set size is divided among colors.
///   first_color: every color gets floor(F/n), the first color also takes the
///                whole remainder (20 over 3 colors -> 8+6+6).
///   balanced:    the remainder is spread one by one over the earliest colors
///                (20 over 3 colors -> 7+7+6).
enum class SplitRule { first_color, balanced };

SplitRule parse_split_rule(std::string_view text);

struct Range {
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Parses "a..b" with a <= b.
Range parse_range(std::string_view text);

struct BenchPlan {
  /// Group source; for set_size and group_size sweeps every "{n}" is
  /// replaced by the sweep value, for colors sweeps it must not contain one.
  std::string family;
  SweepAxis axis = SweepAxis::colors;
  Range range;
  unsigned threads = 1;
  /// Colors used by set_size and group_size sweeps.
  std::size_t colors = 2;
  /// Each point is timed this many times; the fastest run is reported.
  std::size_t repeat = 1;
  SplitRule split = SplitRule::first_color;
};

struct BenchRecord {
  std::uint64_t group_order = 0;
  std::size_t set_size = 0;
  Concentration concentration{{0}};
  double elapsed_ms = 0.0;
  BigCount count;

  std::size_t num_colors() const noexcept { return concentration.colors(); }
  std::string csv_row() const;
};

inline constexpr std::string_view kCsvHeader =
    "group_order,set_size,num_colors,concentration,elapsed_ms,count";

/// Splits `total` into `colors` non-increasing parts according to `rule`.
Concentration equal_split(std::size_t total, std::size_t colors,
                          SplitRule rule = SplitRule::first_color);

/// Runs every point of the plan, writing the CSV header and each row to
/// `csv` (if given) as soon as it is measured. Only the Polya count itself is
/// timed; group construction is not.
std::vector<BenchRecord> run_bench(const BenchPlan& plan, std::ostream* csv = nullptr);

}  // namespace polya::bench
