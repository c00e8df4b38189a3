#include "polya/oracle.hpp"

#include <set>

#include "polya/errors.hpp"

namespace polya::oracle {

namespace {

BigCount factorial(std::size_t n) {
  BigCount f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_coloring_rails(const Group& g, const Concentration& conc, const GuardRails& rails) {
  if (conc.total() != g.set_size()) {
    throw InputError("concentration sums to " + std::to_string(conc.total()) +
                     " but the group acts on " + std::to_string(g.set_size()) + " elements");
  }
  if (g.order() == 0) throw InputError("group has no elements");
  if (g.set_size() > rails.max_set_size) {
    throw GuardRailError("set size " + std::to_string(g.set_size()) + " exceeds oracle limit " +
                         std::to_string(rails.max_set_size));
  }
  if (coloring_count(conc) > rails.max_colorings) {
    throw GuardRailError(to_decimal(coloring_count(conc)) + " colorings exceed oracle limit " +
                         std::to_string(rails.max_colorings));
  }
}

bool is_fixed(const Permutation& p, const std::vector<std::size_t>& coloring) {
  for (std::size_t j = 0; j < coloring.size(); ++j) {
    if (coloring[j] != coloring[p[j]]) return false;
  }
  return true;
}

}  // namespace

BigCount coloring_count(const Concentration& conc) {
  BigCount denominator = 1;
  for (std::size_t c : conc.counts()) denominator *= factorial(c);
  return factorial(conc.total()) / denominator;
}

BigCount burnside_count(const Group& g, const Concentration& conc, const GuardRails& rails) {
  check_coloring_rails(g, conc, rails);
  std::uint64_t fixed = 0;
  for_each_coloring(conc, [&](const std::vector<std::size_t>& coloring) {
    for (const auto& p : g) {
      if (is_fixed(p, coloring)) ++fixed;
    }
  });
  if (fixed % g.order() != 0) {
    throw ConsistencyError("fixed-coloring total " + std::to_string(fixed) +
                           " is not divisible by the group order");
  }
  return BigCount(fixed / g.order());
}

std::vector<std::vector<std::size_t>> orbit_representatives(const Group& g,
                                                            const Concentration& conc,
                                                            const GuardRails& rails) {
  check_coloring_rails(g, conc, rails);
  std::set<std::vector<std::size_t>> representatives;
  std::vector<std::size_t> image(g.set_size());
  std::vector<std::size_t> least;
  for_each_coloring(conc, [&](const std::vector<std::size_t>& coloring) {
    least = coloring;
    for (const auto& p : g) {
      for (std::size_t j = 0; j < coloring.size(); ++j) image[p[j]] = coloring[j];
      if (image < least) least = image;
    }
    representatives.insert(least);
  });
  return {representatives.begin(), representatives.end()};
}

BigCount enumerate_orbits(const Group& g, const Concentration& conc, const GuardRails& rails) {
  return BigCount(orbit_representatives(g, conc, rails).size());
}

SparsePolynomial::SparsePolynomial(std::size_t variables) : variables_(variables) {
  if (variables == 0) throw InputError("polynomial needs at least one variable");
  terms_.emplace(Exponents(variables, 0), BigCount(1));
}

BigCount SparsePolynomial::coefficient(std::span<const std::size_t> exponents) const {
  auto it = terms_.find(Exponents(exponents.begin(), exponents.end()));
  return it == terms_.end() ? BigCount(0) : it->second;
}

void SparsePolynomial::multiply_by_power_sum(std::size_t r) {
  std::map<Exponents, BigCount> next;
  for (const auto& [exponents, coeff] : terms_) {
    for (std::size_t i = 0; i < variables_; ++i) {
      Exponents e = exponents;
      e[i] += r;
      next[e] += coeff;
    }
  }
  terms_ = std::move(next);
}

std::string SparsePolynomial::to_string() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exponents, coeff] = *it;
    if (!out.empty()) out += " + ";
    std::string monomial;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += "x" + std::to_string(i + 1);
      if (exponents[i] > 1) monomial += "^" + std::to_string(exponents[i]);
    }
    if (monomial.empty()) {
      out += to_decimal(coeff);
    } else if (coeff == 1) {
      out += monomial;
    } else {
      out += to_decimal(coeff) + "*" + monomial;
    }
  }
  return out.empty() ? "0" : out;
}

SparsePolynomial naive_expand(const PolyaProduct& product, std::size_t colors,
                              const GuardRails& rails) {
  if (product.degree() > rails.max_expand_degree) {
    throw GuardRailError("total degree " + std::to_string(product.degree()) +
                         " exceeds expansion limit " + std::to_string(rails.max_expand_degree));
  }
  if (colors > rails.max_expand_colors) {
    throw GuardRailError(std::to_string(colors) + " colors exceed expansion limit " +
                         std::to_string(rails.max_expand_colors));
  }
  SparsePolynomial poly(colors);
  for (const auto& f : product.factors()) {
    for (std::size_t k = 0; k < f.multiplicity; ++k) poly.multiply_by_power_sum(f.cycle_length);
  }
  return poly;
}

}  // namespace polya::oracle
