#pragma once

// Brute-force reference counts. These stay deliberately naive: colorings are
// enumerated explicitly and fixed points are checked on the raw image arrays,
// never through cycle structures or the coefficient engine.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polya/big_count.hpp"
#include "polya/concentration.hpp"
#include "polya/cycle_index.hpp"
#include "polya/group.hpp"

namespace polya::oracle {

struct GuardRails {
  std::size_t max_set_size = 16;
  std::uint64_t max_colorings = 10'000'000;
  std::size_t max_expand_degree = 16;
  std::size_t max_expand_colors = 4;
};

/// Number of colorings at the concentration, F! / (c_1! ... c_n!), computed
/// from exact factorials.
BigCount coloring_count(const Concentration& conc);

/// Calls fn(coloring) for every coloring at the concentration, in
/// lexicographic order; coloring[j] is the color index of element j.
template <typename Fn>
void for_each_coloring(const Concentration& conc, Fn&& fn);

/// Orbit count as (sum over g of colorings fixed by g) / |G|. Throws
/// GuardRailError outside the guard rails, ConsistencyError when the sum is
/// not divisible by |G|.
BigCount burnside_count(const Group& g, const Concentration& conc, const GuardRails& rails = {});

/// Orbit count by mapping every coloring to the lexicographically least
/// coloring in its orbit and counting distinct representatives.
BigCount enumerate_orbits(const Group& g, const Concentration& conc,
                          const GuardRails& rails = {});

/// Orbit representatives found by enumerate_orbits, sorted.
std::vector<std::vector<std::size_t>> orbit_representatives(const Group& g,
                                                            const Concentration& conc,
                                                            const GuardRails& rails = {});

/// Multivariate polynomial with exact coefficients keyed by exponent vector.
/// Zero coefficients are never stored.
class SparsePolynomial {
 public:
  using Exponents = std::vector<std::size_t>;

  /// The constant 1 in `variables` variables.
  explicit SparsePolynomial(std::size_t variables);

  std::size_t variables() const noexcept { return variables_; }
  const std::map<Exponents, BigCount>& terms() const noexcept { return terms_; }
  /// Zero for absent terms.
  BigCount coefficient(std::span<const std::size_t> exponents) const;

  /// Multiplies in place by (x_1^r + ... + x_n^r).
  void multiply_by_power_sum(std::size_t r);

  /// Terms in descending lexicographic exponent order, e.g.
  /// "x1^4 + 2*x1^2*x2^2 + x2^4".
  std::string to_string() const;

 private:
  std::size_t variables_;
  std::map<Exponents, BigCount> terms_;
};

/// Fully expands prod_a (x_1^r_a + ... + x_n^r_a)^d_a by repeated
/// multiplication. Throws GuardRailError past the guard rails.
SparsePolynomial naive_expand(const PolyaProduct& product, std::size_t colors,
                              const GuardRails& rails = {});

// ---------------------------------------------------------------------------

template <typename Fn>
void for_each_coloring(const Concentration& conc, Fn&& fn) {
  std::vector<std::size_t> coloring;
  for (std::size_t color = 0; color < conc.colors(); ++color) {
    coloring.insert(coloring.end(), conc.counts()[color], color);
  }
  if (coloring.empty()) return;
  do {
    fn(static_cast<const std::vector<std::size_t>&>(coloring));
  } while (std::next_permutation(coloring.begin(), coloring.end()));
}

}  // namespace polya::oracle
