#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "polya/group.hpp"
#include "polya/permutation.hpp"

namespace polya {

/// One multinomial (x_1^r + ... + x_n^r)^d of a Polya product, where r is
/// the cycle length and d the number of cycles of that length.
struct Factor {
  std::size_t cycle_length = 1;
  std::size_t multiplicity = 1;

  /// d * r, the total exponent mass the factor contributes to every term.
  std::size_t degree() const noexcept { return cycle_length * multiplicity; }

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Product of multinomials for one group operation, factors ordered by
/// strictly increasing cycle length. The number of colors is not part of the
/// product; it is supplied when a coefficient is requested.
class PolyaProduct {
 public:
  /// Throws InputError unless lengths are strictly increasing and all
  /// multiplicities are positive.
  explicit PolyaProduct(std::vector<Factor> factors);

  std::span<const Factor> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const Factor& operator[](std::size_t i) const { return factors_[i]; }

  /// Sum of r * d, i.e. the set size of the originating permutation.
  std::size_t degree() const noexcept;
  /// Number of disjoint cycles, i.e. sum of d.
  std::size_t cycle_count() const noexcept;

  friend auto operator<=>(const PolyaProduct&, const PolyaProduct&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Canonical product for a cycle structure, independent of class order.
PolyaProduct polya_product(const CycleStructure& cs);

/// Exponents {0, r, 2r, ..., d r} a single variable can carry in the
/// expansion of (x_1^r + ... + x_n^r)^d.
class ExponentDomain {
 public:
  ExponentDomain(std::size_t cycle_length, std::size_t multiplicity);

  std::span<const std::size_t> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(std::size_t v) const noexcept;

 private:
  std::size_t step_;
  std::vector<std::size_t> values_;
};

ExponentDomain exponent_domain(std::size_t cycle_length, std::size_t multiplicity);

/// Distinct products of a group with the number of operations sharing each.
struct WeightedProducts {
  std::map<PolyaProduct, std::uint64_t> entries;

  /// Sum of multiplicities; equals the group order.
  std::uint64_t total() const noexcept;
};

WeightedProducts dedupe_products(const Group& g);

}  // namespace polya
