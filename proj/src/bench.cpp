#include "polya/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "polya/coefficient.hpp"
#include "polya/errors.hpp"
#include "polya/group_source.hpp"

namespace polya::bench {

namespace {

constexpr std::string_view kPlaceholder = "{n}";

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string substitute(std::string_view family, std::size_t n) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = family.find(kPlaceholder, pos);
    out += family.substr(pos, hit == std::string_view::npos ? family.npos : hit - pos);
    if (hit == std::string_view::npos) break;
    out += std::to_string(n);
    pos = hit + kPlaceholder.size();
  }
  return out;
}

void check_plan(const BenchPlan& plan) {
  if (plan.family.empty()) throw InputError("benchmark family is empty");
  const bool templated = plan.family.find(kPlaceholder) != std::string::npos;
  if (plan.axis == SweepAxis::colors) {
    if (templated) throw InputError("colors sweep takes a fixed group; drop '{n}' from the family");
    if (plan.range.first == 0) throw InputError("colors sweep must start at 1 or more colors");
  } else {
    if (!templated) throw InputError("set_size/group_size sweeps need '{n}' in the family");
    if (plan.colors == 0) throw InputError("benchmark needs at least one color");
  }
  if (plan.repeat == 0) throw InputError("repeat count must be at least 1");
  if (plan.threads == 0) throw InputError("thread count must be at least 1");
}

}  // namespace

SweepAxis parse_axis(std::string_view text) {
  if (text == "colors") return SweepAxis::colors;
  if (text == "set_size") return SweepAxis::set_size;
  if (text == "group_size") return SweepAxis::group_size;
  throw InputError("unknown sweep axis '" + std::string(text) +
                   "' (expected colors, set_size or group_size)");
}

Range parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw InputError("range '" + std::string(text) + "' is not of the form a..b");
  }
  Range r{parse_size(text.substr(0, dots), "range start"),
          parse_size(text.substr(dots + 2), "range end")};
  if (r.first > r.last) throw InputError("range '" + std::string(text) + "' is empty");
  return r;
}

SplitRule parse_split_rule(std::string_view text) {
  if (text == "first_color") return SplitRule::first_color;
  if (text == "balanced") return SplitRule::balanced;
  throw InputError("unknown split rule '" + std::string(text) +
                   "' (expected first_color or balanced)");
}

Concentration equal_split(std::size_t total, std::size_t colors, SplitRule rule) {
  if (colors == 0) throw InputError("cannot split over zero colors");
  std::vector<std::size_t> parts(colors, total / colors);
  const std::size_t remainder = total % colors;
  if (rule == SplitRule::first_color) {
    parts[0] += remainder;
  } else {
    for (std::size_t i = 0; i < remainder; ++i) ++parts[i];
  }
  return Concentration(std::move(parts));
}

std::string BenchRecord::csv_row() const {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", elapsed_ms);
  return std::to_string(group_order) + ',' + std::to_string(set_size) + ',' +
         std::to_string(num_colors()) + ',' + concentration.join('+') + ',' + elapsed + ',' +
         to_decimal(count);
}

std::vector<BenchRecord> run_bench(const BenchPlan& plan, std::ostream* csv) {
  check_plan(plan);
  if (csv != nullptr) *csv << kCsvHeader << '\n' << std::flush;

  std::vector<BenchRecord> records;
  const CountOptions options{plan.threads};
  for (std::size_t n = plan.range.first; n <= plan.range.last; ++n) {
    const bool colors_axis = plan.axis == SweepAxis::colors;
    const Group group = parse_group_source(colors_axis ? plan.family : substitute(plan.family, n));

    BenchRecord record;
    record.group_order = group.order();
    record.set_size = group.set_size();
    record.concentration = equal_split(group.set_size(), colors_axis ? n : plan.colors, plan.split);

    double best = 0.0;
    for (std::size_t run = 0; run < plan.repeat; ++run) {
      const auto start = std::chrono::steady_clock::now();
      BigCount count = polya_count(group, record.concentration, options);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      if (run == 0 || elapsed.count() < best) best = elapsed.count();
      record.count = std::move(count);
    }
    record.elapsed_ms = best;

    if (csv != nullptr) *csv << record.csv_row() << '\n' << std::flush;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace polya::bench
