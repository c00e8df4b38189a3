#include "polya/cli.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "polya/coefficient.hpp"
#include "polya/cycle_index.hpp"
#include "polya/errors.hpp"
#include "polya/group_source.hpp"
#include "polya/oracle.hpp"

namespace polya::cli {

namespace {

struct OracleRun {
  std::string_view name;
  BigCount (*compute)(const Group&, const Concentration&);
};

BigCount burnside(const Group& g, const Concentration& c) { return oracle::burnside_count(g, c); }
BigCount orbits(const Group& g, const Concentration& c) { return oracle::enumerate_orbits(g, c); }

// Polya count with every product expanded in full.
BigCount expanded(const Group& g, const Concentration& c) {
  const auto products = dedupe_products(g);
  BigCount sum = 0;
  for (const auto& [product, multiplicity] : products.entries) {
    sum += oracle::naive_expand(product, c.colors()).coefficient(c.counts()) * multiplicity;
  }
  if (sum % g.order() != 0) {
    throw ConsistencyError("expanded coefficient sum " + to_decimal(sum) +
                           " is not divisible by the group order");
  }
  return sum / g.order();
}

std::vector<OracleRun> oracles_for(OracleMode mode) {
  const OracleRun b{"burnside", &burnside};
  const OracleRun o{"orbits", &orbits};
  const OracleRun e{"expand", &expanded};
  switch (mode) {
    case OracleMode::none: return {};
    case OracleMode::burnside: return {b};
    case OracleMode::orbits: return {o};
    case OracleMode::expand: return {e};
    case OracleMode::all: return {b, o, e};
  }
  return {};
}

}  // namespace

OracleMode parse_oracle_mode(std::string_view text) {
  if (text == "none") return OracleMode::none;
  if (text == "burnside") return OracleMode::burnside;
  if (text == "orbits") return OracleMode::orbits;
  if (text == "expand") return OracleMode::expand;
  if (text == "all") return OracleMode::all;
  throw InputError("unknown oracle mode '" + std::string(text) + "'");
}

int run_count(const CountRequest& request, std::ostream& out, std::ostream& err) {
  BigCount count;
  Group group(1, {});
  Concentration conc({0});
  try {
    conc = Concentration::parse(request.colors);
    if (conc.total() == 0) throw InputError("concentration needs at least one positive count");
    group = parse_group_source(request.group_source);
    if (request.validate_group) {
      const GroupReport report = validate_group(group);
      if (!report.valid()) {
        err << "error: '" << request.group_source << "' is not a group\n";
        for (const auto& failure : report.failures) err << "  " << failure << '\n';
        return exit_code::kInputError;
      }
    }
    count = polya_count(group, conc, CountOptions{std::max(1u, request.threads)});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  out << to_decimal(count) << '\n' << std::flush;

  bool mismatch = false;
  bool refused = false;
  for (const auto& run : oracles_for(request.oracle)) {
    try {
      const BigCount expected = run.compute(group, conc);
      if (expected != count) {
        mismatch = true;
        err << "oracle mismatch: " << run.name << " gives " << to_decimal(expected)
            << ", engine gives " << to_decimal(count) << '\n';
      }
    } catch (const GuardRailError& e) {
      refused = true;
      err << "oracle " << run.name << " refused: " << e.what() << '\n';
    } catch (const std::exception& e) {
      mismatch = true;
      err << "oracle " << run.name << " failed: " << e.what() << '\n';
    }
  }
  if (mismatch) return exit_code::kOracleMismatch;
  if (refused) return exit_code::kGuardRail;
  return exit_code::kSuccess;
}

int run_bench(const bench::BenchPlan& plan, std::ostream& out, std::ostream& err) {
  try {
    bench::run_bench(plan, &out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  return exit_code::kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts colorings of a finite set that are distinct under a permutation group."};
  app.name("polya");
  app.require_subcommand(1);

  CountRequest count;
  std::string oracle_mode = "none";
  auto* count_cmd = app.add_subcommand("count", "Count orbits at a fixed color concentration");
  count_cmd->add_option("--group", count.group_source,
                        "dihedral:n, cyclic:n, symmetric:n, trivial:n, subsets:n,k, "
                        "tuples:n,k, A*B, or a group file")
      ->required();
  count_cmd->add_option("--colors", count.colors, "Concentration c1,c2,...")->required();
  count_cmd->add_flag("--validate-group", count.validate_group,
                      "Check identity, distinctness and closure first");
  count_cmd->add_option("--oracle", oracle_mode, "Cross-check with brute force")
      ->check(CLI::IsMember({"none", "burnside", "orbits", "expand", "all"}));
  count_cmd->add_option("--threads", count.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  bench::BenchPlan plan;
  std::string sweep;
  std::string range;
  auto* bench_cmd = app.add_subcommand("bench", "Time a sweep and print CSV");
  bench_cmd->add_option("--family", plan.family, "Group source, '{n}' marks the sweep value")
      ->required();
  bench_cmd->add_option("--sweep", sweep, "colors, set_size or group_size")
      ->required()
      ->check(CLI::IsMember({"colors", "set_size", "group_size"}));
  bench_cmd->add_option("--range", range, "Sweep values a..b")->required();
  bench_cmd->add_option("--threads", plan.threads, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--num-colors", plan.colors, "Colors for set_size/group_size sweeps")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeat", plan.repeat, "Runs per point; the fastest is reported")
      ->check(CLI::PositiveNumber);
  std::string split = "first_color";
  bench_cmd->add_option("--split", split, "Concentration rule: first_color or balanced")
      ->check(CLI::IsMember({"first_color", "balanced"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::kInputError;
  }

  if (*count_cmd) {
    count.oracle = parse_oracle_mode(oracle_mode);
    return run_count(count, out, err);
  }
  try {
    plan.axis = bench::parse_axis(sweep);
    plan.range = bench::parse_range(range);
    plan.split = bench::parse_split_rule(split);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
  return run_bench(plan, out, err);
}

}  // namespace polya::cli
