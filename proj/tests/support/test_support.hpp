#pragma once

// Helpers shared by the unit and acceptance suites. Nothing here calls into
// the coefficient engine.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polya/big_count.hpp"
#include "polya/concentration.hpp"
#include "polya/errors.hpp"
#include "polya/group.hpp"
#include "polya/permutation.hpp"

namespace polya::testing {

// Eight square operations, vertices 1..4, with the labels and cycle strings
// used by the per-row fixtures.
struct SquareOperation {
  const char* name;
  const char* cycles;
};

inline constexpr SquareOperation kSquareOperations[] = {
    {"identity", "(1)(2)(3)(4)"}, {"D1", "(1,3)(2)(4)"}, {"D2", "(1,2)(3)(4)"},
    {"M1", "(1,2)(3,4)"},         {"M2", "(1,4)(2,3)"},  {"R1", "(1,4,3,2)"},
    {"R2", "(1,3)(2,4)"},         {"R3", "(1,2,3,4)"},
};

// The D2 row, (1,2)(3)(4), swaps two adjacent corners and is not a
// symmetry of the square. The diagonal reflection through corners 1 and 3 has
// the same cycle type, so every per-row polynomial and coefficient is
// unchanged; the element set below is the actual group.
inline constexpr const char* kSquareGroupCycles[] = {
    "(1)(2)(3)(4)", "(1,3)(2)(4)", "(2,4)(1)(3)", "(1,2)(3,4)",
    "(1,4)(2,3)",   "(1,4,3,2)",   "(1,3)(2,4)",  "(1,2,3,4)",
};

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Index> image(n);
  std::iota(image.begin(), image.end(), Index{0});
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

// Random permutation that only moves a random subset of at most `moved`
// points; such generators tend to close into small groups.
inline Permutation sparse_permutation(std::size_t n, std::size_t moved, std::mt19937_64& rng) {
  std::vector<Index> points(n);
  std::iota(points.begin(), points.end(), Index{0});
  std::shuffle(points.begin(), points.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(moved, n))(rng);
  std::vector<Index> chosen(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Index> shuffled = chosen;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<Index> image(n);
  std::iota(image.begin(), image.end(), Index{0});
  for (std::size_t i = 0; i < k; ++i) image[chosen[i]] = shuffled[i];
  return Permutation(std::move(image));
}

// Closure of one to three random generators on at most `max_set` points,
// retried until the group has at most `max_order` elements.
inline Group random_small_group(std::mt19937_64& rng, std::size_t max_set,
                                std::size_t max_order) {
  std::uniform_int_distribution<std::size_t> set_size(1, max_set);
  std::uniform_int_distribution<int> generator_count(1, 3);
  std::uniform_int_distribution<int> style(0, 2);
  while (true) {
    const std::size_t n = set_size(rng);
    std::vector<Permutation> generators;
    const int count = generator_count(rng);
    for (int i = 0; i < count; ++i) {
      switch (style(rng)) {
        case 0: generators.push_back(random_permutation(n, rng)); break;
        case 1: generators.push_back(sparse_permutation(n, 3, rng)); break;
        default: generators.push_back(sparse_permutation(n, 5, rng)); break;
      }
    }
    try {
      return close_group(generators, max_order);
    } catch (const GuardRailError&) {
    }
  }
}

// Coefficient of x^target in prod_a (x_1^r_a + ... + x_n^r_a)^d_a by dense
// multiplication, discarding every monomial that already exceeds the target
// in some variable. `factors` holds (r, d) pairs.
inline BigCount truncated_expansion_coefficient(
    const std::vector<std::pair<std::size_t, std::size_t>>& factors,
    const std::vector<std::size_t>& target) {
  std::map<std::vector<std::size_t>, BigCount> poly;
  poly[std::vector<std::size_t>(target.size(), 0)] = 1;
  for (const auto& [r, d] : factors) {
    for (std::size_t k = 0; k < d; ++k) {
      std::map<std::vector<std::size_t>, BigCount> next;
      for (const auto& [e, c] : poly) {
        for (std::size_t i = 0; i < target.size(); ++i) {
          if (e[i] + r > target[i]) continue;
          auto f = e;
          f[i] += r;
          next[f] += c;
        }
      }
      poly = std::move(next);
    }
  }
  auto it = poly.find(target);
  return it == poly.end() ? BigCount(0) : it->second;
}

// Cycle lengths of p grouped as (r, d) pairs, computed from scratch.
inline std::vector<std::pair<std::size_t, std::size_t>> raw_cycle_type(const Permutation& p) {
  std::map<std::size_t, std::size_t> counts;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t j = s; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ++counts[len];
  }
  return {counts.begin(), counts.end()};
}

// Orbit count via per-element truncated expansion, sharing no code with the
// engine. Practical up to a few dozen points.
inline BigCount expansion_polya_count(const Group& g, const Concentration& conc) {
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, std::size_t> types;
  for (const auto& p : g) ++types[raw_cycle_type(p)];
  const std::vector<std::size_t> target(conc.counts().begin(), conc.counts().end());
  BigCount sum = 0;
  for (const auto& [type, mult] : types) sum += truncated_expansion_coefficient(type, target) * mult;
  return sum / g.order();
}

inline std::set<Permutation> as_set(const Group& g) { return {g.begin(), g.end()}; }

}  // namespace polya::testing
