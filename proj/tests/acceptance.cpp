// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "polya/bench.hpp"
#include "polya/coefficient.hpp"
#include "polya/cycle_index.hpp"
#include "polya/group_source.hpp"
#include "polya/oracle.hpp"
#include "support/test_support.hpp"

using namespace polya;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

Concentration conc(std::initializer_list<std::size_t> c) { return Concentration(std::vector<std::size_t>(c)); }

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f ms", ms);
  return buf;
}

Verdict golden_square() {
  Verdict v;
  const Group d4 = dihedral_group(4);
  const auto start = Clock::now();
  const BigCount count = polya_count(d4, conc({2, 2}));
  const double ms = ms_since(start);
  if (count != 2) v.fail("count " + to_decimal(count));
  if (ms >= 10.0) v.fail("took " + fmt_ms(ms));
  v.note("count 2 in " + fmt_ms(ms));
  return v;
}

// Per-row coefficients of x^2 y^2.
Verdict square_coefficients() {
  Verdict v;
  const int expected[] = {6, 2, 2, 2, 2, 0, 2, 0};
  std::size_t row = 0;
  BigCount per_row_sum = 0;
  for (const auto& op : testing::kSquareOperations) {
    const auto product = polya_product(cycle_decomposition(parse_permutation(op.cycles, 4)));
    const BigCount c = coefficient_for_product(product, conc({2, 2}));
    if (c != expected[row]) v.fail(std::string(op.name) + " gives " + to_decimal(c));
    per_row_sum += c;
    ++row;
  }
  const auto tally = polya_tally(dihedral_group(4), conc({2, 2}));
  if (tally.coefficient_sum != 16) v.fail("weighted sum " + to_decimal(tally.coefficient_sum));
  if (per_row_sum != 16) v.fail("row sum " + to_decimal(per_row_sum));
  if (tally.group_order != 8 || tally.count != 2) v.fail("16/8 != " + to_decimal(tally.count));
  v.note("8 rows, weighted sum 16 over order 8");
  return v;
}

Verdict square_expansions() {
  Verdict v;
  // Expected expansion per operation, two colors.
  const char* expected[] = {
      "x1^4 + 4*x1^3*x2 + 6*x1^2*x2^2 + 4*x1*x2^3 + x2^4",
      "x1^4 + 2*x1^3*x2 + 2*x1^2*x2^2 + 2*x1*x2^3 + x2^4",
      "x1^4 + 2*x1^3*x2 + 2*x1^2*x2^2 + 2*x1*x2^3 + x2^4",
      "x1^4 + 2*x1^2*x2^2 + x2^4",
      "x1^4 + 2*x1^2*x2^2 + x2^4",
      "x1^4 + x2^4",
      "x1^4 + 2*x1^2*x2^2 + x2^4",
      "x1^4 + x2^4",
  };
  std::set<std::string> distinct;
  std::size_t row = 0;
  for (const auto& op : testing::kSquareOperations) {
    const auto product = polya_product(cycle_decomposition(parse_permutation(op.cycles, 4)));
    const std::string got = oracle::naive_expand(product, 2).to_string();
    if (got != expected[row]) v.fail(std::string(op.name) + " expands to " + got);
    distinct.insert(got);
    ++row;
  }
  v.note("8 rows match, " + std::to_string(distinct.size()) + " distinct polynomials");
  return v;
}

Verdict oracle_sweep() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(20240705);
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t largest = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Group g = testing::random_small_group(rng, 8, 48);
    largest = std::max<std::size_t>(largest, g.order());
    for (std::size_t colors = 1; colors <= 3; ++colors) {
      for (const auto& c : all_concentrations(g.set_size(), colors)) {
        const BigCount engine = polya_count(g, c);
        const BigCount burnside = oracle::burnside_count(g, c);
        const BigCount orbits = oracle::enumerate_orbits(g, c);
        ++cases;
        if (engine != burnside || engine != orbits) {
          if (mismatches++ == 0) {
            v.fail("F=" + std::to_string(g.set_size()) + " |G|=" + std::to_string(g.order()) +
                   " c=" + c.join(',') + ": engine " + to_decimal(engine) + ", burnside " +
                   to_decimal(burnside) + ", orbits " + to_decimal(orbits));
          }
        }
      }
    }
  }
  const double ms = ms_since(start);
  if (mismatches > 0) v.fail(std::to_string(mismatches) + " mismatches");
  if (ms >= 60'000.0) v.fail("took " + fmt_ms(ms));
  v.note("200 groups (max order " + std::to_string(largest) + "), " + std::to_string(cases) +
         " concentrations, 0 mismatches in " + fmt_ms(ms));
  return v;
}

Verdict completeness() {
  Verdict v;
  for (std::size_t n = 3; n <= 8; ++n) {
    const Group g = dihedral_group(n);
    for (std::size_t colors : {2u, 3u}) {
      BigCount total = 0;
      for (const auto& c : all_concentrations(n, colors)) total += polya_count(g, c);
      BigCount fixed = 0;
      for (const auto& op : g) {
        std::size_t cycles = 0;
        for (const auto& [r, d] : testing::raw_cycle_type(op)) cycles += d;
        fixed += boost::multiprecision::pow(BigCount(colors), static_cast<unsigned>(cycles));
      }
      if (fixed % g.order() != 0 || total != fixed / g.order()) {
        v.fail("dihedral:" + std::to_string(n) + " with " + std::to_string(colors) +
               " colors: " + to_decimal(total) + " vs " + to_decimal(fixed) + "/" +
               std::to_string(g.order()));
      }
    }
  }
  v.note("dihedral:3..8, 2 and 3 colors");
  return v;
}

Verdict scaling() {
  Verdict v;
  bench::BenchPlan plan;
  plan.family = "symmetric:4*symmetric:5";
  plan.axis = bench::SweepAxis::colors;
  plan.range = {2, 5};
  plan.repeat = 5;
  const Group g = parse_group_source(plan.family);
  std::set<Index> orbit;
  for (const auto& p : g) orbit.insert(p[0]);
  if (g.set_size() != 20 || orbit.size() != 20) v.fail("fixture is not transitive on 20 points");

  const auto records = bench::run_bench(plan);
  if (records.size() != 4) {
    v.fail("expected 4 points");
    return v;
  }
  std::string timings;
  for (const auto& r : records) {
    if (r.elapsed_ms >= 30'000.0) v.fail(r.concentration.join('+') + " took " + fmt_ms(r.elapsed_ms));
    if (r.concentration != bench::equal_split(20, r.num_colors())) {
      v.fail("unexpected split " + r.concentration.join('+'));
    }
    const BigCount expected = testing::expansion_polya_count(g, r.concentration);
    if (r.count != expected) {
      v.fail(r.concentration.join('+') + ": " + to_decimal(r.count) + " vs " + to_decimal(expected));
    }
    if (!timings.empty()) timings += ", ";
    timings += r.concentration.join('+') + " " + fmt_ms(r.elapsed_ms);
  }
  std::size_t rising = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].elapsed_ms >= records[i - 1].elapsed_ms) ++rising;
  }
  // Four points give three consecutive pairs; all must rise.
  if (rising < records.size() - 1) v.fail("elapsed rises on " + std::to_string(rising) + " of 3 pairs");
  v.note(plan.family + " (order " + std::to_string(g.order()) + "): " + timings);
  return v;
}

Verdict exact_stress() {
  Verdict v;
  for (const char* source : {"dihedral:40", "dihedral:8*cyclic:5"}) {
    const Group g = parse_group_source(source);
    if (g.set_size() != 40 || g.order() < 48) v.fail(std::string(source) + " is not a valid fixture");
    const auto tally = polya_tally(g, conc({20, 20}), {4});
    const std::string text = to_decimal(tally.count);
    if (BigCount(text) != tally.count) v.fail(std::string(source) + ": decimal round trip");
    if (tally.coefficient_sum % g.order() != 0) v.fail(std::string(source) + ": sum not divisible");
    const BigCount expected = testing::expansion_polya_count(g, conc({20, 20}));
    if (tally.count != expected) {
      v.fail(std::string(source) + ": " + text + " vs " + to_decimal(expected));
    }
    v.note(std::string(source) + " (order " + std::to_string(g.order()) + ") -> " + text);
  }
  return v;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured run_binary(const std::string& args) {
  const std::string command = std::string(POLYA_CLI_PATH) + " " + args + " 2>/dev/null";
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) c.out.append(buffer, n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

Verdict determinism() {
  Verdict v;
  std::mt19937_64 rng(8128);
  const std::vector<std::function<std::string()>> families = {
      [&] { return "dihedral:" + std::to_string(3 + rng() % 40); },
      [&] { return "cyclic:" + std::to_string(2 + rng() % 40); },
      [&] { return "symmetric:" + std::to_string(2 + rng() % 6); },
      [&] { return "subsets:" + std::to_string(5 + rng() % 3) + ",2"; },
      [&] { return "tuples:" + std::to_string(3 + rng() % 3) + ",2"; },
      [&] { return "dihedral:" + std::to_string(3 + rng() % 6) + "*cyclic:" + std::to_string(2 + rng() % 4); },
  };
  for (int trial = 0; trial < 20; ++trial) {
    const std::string group = families[rng() % families.size()]();
    const std::size_t n = parse_group_source(group).set_size();
    const std::size_t colors = 2 + rng() % 4;
    std::vector<std::size_t> counts(colors, 0);
    for (std::size_t i = 0; i < n; ++i) ++counts[rng() % colors];
    const std::string request = "count --group " + group + " --colors " + Concentration(counts).join(',');
    const Captured one = run_binary(request + " --threads 1");
    const Captured eight = run_binary(request + " --threads 8");
    if (one.status != 0 || eight.status != 0) {
      v.fail("'" + request + "' exited " + std::to_string(one.status) + "/" + std::to_string(eight.status));
    } else if (one.out != eight.out || one.out.empty()) {
      v.fail("'" + request + "' differs: " + one.out + " vs " + eight.out);
    }
  }
  v.note("20 requests byte-identical at 1 and 8 threads");
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"AC1 square golden count", golden_square},
      {"AC2 square per-operation coefficients", square_coefficients},
      {"AC3 square expanded polynomials", square_expansions},
      {"AC4 engine vs brute-force oracles", oracle_sweep},
      {"AC5 completeness over concentrations", completeness},
      {"AC6 colors sweep on 20 points", scaling},
      {"AC7 exact arithmetic on 40 points", exact_stress},
      {"AC8 thread-count determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
