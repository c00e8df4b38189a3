#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "polya/bench.hpp"

namespace polya::cli {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kInputError = 2;
inline constexpr int kOracleMismatch = 3;
inline constexpr int kGuardRail = 4;
}  // namespace exit_code

enum class OracleMode { none, burnside, orbits, expand, all };

OracleMode parse_oracle_mode(std::string_view text);

struct CountRequest {
  std::string group_source;
  std::string colors;  // "c1,c2,..."
  OracleMode oracle = OracleMode::none;
  bool validate_group = false;
  unsigned threads = 1;
};

/// Prints the orbit count on `out`. Oracles requested by the request are run
/// afterwards; mismatches and guard-rail refusals are reported on `err` and
/// reflected in the returned exit code.
int run_count(const CountRequest& request, std::ostream& out, std::ostream& err);

/// Writes the benchmark CSV to `out`.
int run_bench(const bench::BenchPlan& plan, std::ostream& out, std::ostream& err);

/// Full command line entry point: `count ...` or `bench ...`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polya::cli
