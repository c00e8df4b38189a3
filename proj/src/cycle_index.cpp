#include "polya/cycle_index.hpp"

#include <algorithm>
#include <cassert>

#include "polya/errors.hpp"

namespace polya {

PolyaProduct::PolyaProduct(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].cycle_length == 0 || factors_[i].multiplicity == 0) {
      throw InputError("Polya factors need positive cycle length and multiplicity");
    }
    if (i > 0 && factors_[i - 1].cycle_length >= factors_[i].cycle_length) {
      throw InputError("Polya factors must have strictly increasing cycle lengths");
    }
  }
}

std::size_t PolyaProduct::degree() const noexcept {
  std::size_t total = 0;
  for (const auto& f : factors_) total += f.degree();
  return total;
}

std::size_t PolyaProduct::cycle_count() const noexcept {
  std::size_t total = 0;
  for (const auto& f : factors_) total += f.multiplicity;
  return total;
}

PolyaProduct polya_product(const CycleStructure& cs) {
  std::vector<Factor> factors;
  factors.reserve(cs.classes().size());
  for (const auto& c : cs.classes()) factors.push_back({c.length, c.count});
  std::sort(factors.begin(), factors.end());
  return PolyaProduct(std::move(factors));
}

ExponentDomain::ExponentDomain(std::size_t cycle_length, std::size_t multiplicity)
    : step_(cycle_length) {
  if (cycle_length == 0 || multiplicity == 0) {
    throw InputError("exponent domain needs r >= 1 and d >= 1");
  }
  values_.reserve(multiplicity + 1);
  for (std::size_t k = 0; k <= multiplicity; ++k) values_.push_back(k * cycle_length);
}

bool ExponentDomain::contains(std::size_t v) const noexcept {
  return v % step_ == 0 && v <= values_.back();
}

ExponentDomain exponent_domain(std::size_t cycle_length, std::size_t multiplicity) {
  return ExponentDomain(cycle_length, multiplicity);
}

std::uint64_t WeightedProducts::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& [product, count] : entries) sum += count;
  return sum;
}

WeightedProducts dedupe_products(const Group& g) {
  WeightedProducts out;
  for (const auto& op : g) ++out.entries[polya_product(cycle_decomposition(op))];
  assert(out.total() == g.order());
  return out;
}

}  // namespace polya
